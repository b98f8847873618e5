#pragma once
/*
certificate.hpp
---------------
Replayable uncolorability certificates: an ordered list of symmetry fixes
and forced propagations that ends in a contradiction.

Replay keeps a partial coloring. Steps:

  WLOG_FIX v -> 1, alternatives (v_k, g_k)
      Some triple with no vertex colored 1 must have all of its uncolored
      members among {v, v_1, ...}. Each g_k must map the vertex set onto
      itself, send v_k to v, and send every colored vertex to a vertex of
      the same color. Only color 1 is accepted.

  PROPAGATE context => (v, c)
      context is an edge or triple of the graph containing v, and c is
      forced: an edge with a 1 forces 0, a triple with a 1 forces 0, a
      triple with two 0s forces 1. A conclusion that clashes with an
      existing color marks v as forced both ways.

  CONTRADICTION v | context
      v has been forced both ways, or the context is violated. Must be the
      last step.
*/

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kscolor/orthograph.hpp"

namespace ks {

namespace cert {

struct Alternative {
    Vec3 vertex;
    std::array<Int, 9> witness;  // row-major, validated at replay
    friend bool operator==(const Alternative&, const Alternative&) = default;
};

struct WlogFix {
    Vec3 vertex;
    int color = 1;
    std::vector<Alternative> alternatives;
    friend bool operator==(const WlogFix&, const WlogFix&) = default;
};

struct Propagate {
    std::vector<Vec3> context;  // 2 or 3 vectors
    Vec3 vertex;
    int color = 0;
    friend bool operator==(const Propagate&, const Propagate&) = default;
};

struct Contradiction {
    std::optional<Vec3> vertex;
    std::vector<Vec3> context;
    friend bool operator==(const Contradiction&, const Contradiction&) = default;
};

using Step = std::variant<WlogFix, Propagate, Contradiction>;

}  // namespace cert

struct Certificate {
    std::vector<cert::Step> steps;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertificateVerdict {
    bool valid = false;
    std::size_t step = 0;  // offending step index when invalid
    std::string reason;
};

CertificateVerdict verify_certificate(const OrthoGraph& g, const Certificate& c);

/// Certificate text format. One record per line, '#' starts a comment.
///
///   WLOG_FIX vertex x y z color c [alt x y z witness m11 .. m33]...
///   PROPAGATE context x y z x y z [x y z] vertex x y z color c
///   CONTRADICTION vertex x y z
///   CONTRADICTION context x y z x y z [x y z]
///
/// Throws std::runtime_error with the line number on malformed input.
Certificate parse_certificate(const std::string& text);
std::string format_certificate(const Certificate& c);

/// Proof, as a certificate, that the 85-vector set has no coloring,
/// compiled in from data/q85_proof.cert.
const std::string& bundled_certificate_text();

}  // namespace ks
