#pragma once
/*
orthograph.hpp
--------------
Orthogonality structure of a vector set. Pair edges carry "at most one 1",
mutually orthogonal triples (full contexts in dimension 3) carry "exactly
one 1". Edges that lie in no triple are kept; they still constrain.
*/

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kscolor/vecset.hpp"

namespace ks {

using Vertex = std::uint32_t;
using Edge = std::array<Vertex, 2>;    // i < j
using Triple = std::array<Vertex, 3>;  // i < j < k

/// Bare constraint hypergraph; what the solver consumes. Edges and triples
/// are sorted lexicographically with ascending indices inside each tuple.
struct ContextGraph {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Triple> triples;

    /// Sorts, dedupes and checks indices. Adds any missing edge implied by a
    /// triple. Throws std::invalid_argument on self-loops or bad indices.
    void normalize();

    friend bool operator==(const ContextGraph&, const ContextGraph&) = default;
};

struct OrthoGraph {
    VectorSet vertices;
    ContextGraph graph;

    std::size_t size() const { return vertices.size(); }
};

struct GraphStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t triples = 0;
    std::size_t bare_edges = 0;  // edges contained in no triple

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Parallel over the first index; output identical to build_graph_serial.
OrthoGraph build_graph(const VectorSet& s);
OrthoGraph build_graph_serial(const VectorSet& s);

/// Triples containing vertex i, in canonical order. Throws std::out_of_range.
std::vector<Triple> contexts_of(const ContextGraph& g, Vertex i);

GraphStats graph_stats(const ContextGraph& g);

bool has_edge(const ContextGraph& g, Vertex a, Vertex b);
bool has_triple(const ContextGraph& g, Vertex a, Vertex b, Vertex c);

}  // namespace ks
