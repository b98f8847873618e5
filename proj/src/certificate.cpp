#include "kscolor/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kscolor/certificate_asset.hpp"

namespace ks {

namespace {

constexpr int kFree = -1;

struct Replay {
    const OrthoGraph& g;
    std::vector<int> color;
    std::set<Vertex> clashed;

    explicit Replay(const OrthoGraph& graph) : g(graph), color(graph.size(), kFree) {}

    std::optional<Vertex> lookup(const Vec3& v) const {
        if (v.is_zero()) return std::nullopt;
        auto idx = g.vertices.index_of(canonicalize(v));
        if (!idx) return std::nullopt;
        return static_cast<Vertex>(*idx);
    }
};

std::string show(const Vec3& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," + std::to_string(v.z) + ")";
}

using Outcome = std::optional<std::string>;  // nullopt = sound

Outcome resolve_all(const Replay& r, const std::vector<Vec3>& vs, std::vector<Vertex>& out) {
    for (const auto& v : vs) {
        auto idx = r.lookup(v);
        if (!idx) return "vector " + show(v) + " is not in the set";
        out.push_back(*idx);
    }
    return std::nullopt;
}

Outcome check_wlog(Replay& r, const cert::WlogFix& s) {
    if (s.color != 1) return std::string("WLOG_FIX must fix color 1");
    auto v = r.lookup(s.vertex);
    if (!v) return "vector " + show(s.vertex) + " is not in the set";
    if (r.color[*v] != kFree) return show(s.vertex) + " is already colored";

    std::vector<Vertex> candidates{*v};
    for (const auto& alt : s.alternatives) {
        auto a = r.lookup(alt.vertex);
        if (!a) return "vector " + show(alt.vertex) + " is not in the set";
        if (r.color[*a] != kFree) return show(alt.vertex) + " is already colored";
        if (std::find(candidates.begin(), candidates.end(), *a) != candidates.end())
            return "alternative " + show(alt.vertex) + " listed twice";
        candidates.push_back(*a);
    }

    const auto covers = [&](const Triple& t) {
        for (Vertex u : t) {
            if (r.color[u] == 1) return false;
            if (r.color[u] == kFree && std::find(candidates.begin(), candidates.end(), u) == candidates.end())
                return false;
        }
        return true;
    };
    if (std::none_of(r.g.graph.triples.begin(), r.g.graph.triples.end(), covers))
        return std::string("no triple forces one of the candidates to be 1");

    for (const auto& alt : s.alternatives) {
        SignedPermutation w;
        try {
            w = SignedPermutation::from_matrix(alt.witness);
        } catch (const std::invalid_argument& e) {
            return std::string("witness is not a signed permutation: ") + e.what();
        }
        if (!r.g.vertices.invariant_under(w)) return "witness for " + show(alt.vertex) + " does not preserve the set";
        if (canonicalize(w.apply(alt.vertex)) != r.g.vertices[*v])
            return "witness does not map " + show(alt.vertex) + " to " + show(s.vertex);
        for (Vertex u = 0; u < r.g.size(); ++u) {
            if (r.color[u] == kFree) continue;
            const auto img = static_cast<Vertex>(*r.g.vertices.index_of(apply_symmetry(w, r.g.vertices[u])));
            if (r.color[img] != r.color[u])
                return "witness for " + show(alt.vertex) + " moves colored vertex " + show(r.g.vertices[u].vec());
        }
    }
    r.color[*v] = 1;
    return std::nullopt;
}

Outcome check_propagate(Replay& r, const cert::Propagate& s) {
    if (s.color != 0 && s.color != 1) return std::string("color must be 0 or 1");
    std::vector<Vertex> ctx;
    if (auto err = resolve_all(r, s.context, ctx)) return err;
    auto v = r.lookup(s.vertex);
    if (!v) return "vector " + show(s.vertex) + " is not in the set";
    if (std::find(ctx.begin(), ctx.end(), *v) == ctx.end())
        return show(s.vertex) + " is not in the cited context";

    std::vector<Vertex> others;
    for (Vertex u : ctx)
        if (u != *v) others.push_back(u);

    if (ctx.size() == 2) {
        if (!has_edge(r.g.graph, ctx[0], ctx[1])) return std::string("cited pair is not orthogonal");
        if (s.color != 0 || others.size() != 1 || r.color[others[0]] != 1)
            return std::string("edge does not force this color");
    } else if (ctx.size() == 3) {
        if (!has_triple(r.g.graph, ctx[0], ctx[1], ctx[2])) return std::string("cited triple is not orthogonal");
        if (others.size() != 2) return std::string("cited triple repeats a vector");
        const int a = r.color[others[0]];
        const int b = r.color[others[1]];
        const bool forced = s.color == 1 ? (a == 0 && b == 0) : (a == 1 || b == 1);
        if (!forced) return std::string("triple does not force this color");
    } else {
        return std::string("context must have 2 or 3 vectors");
    }

    if (r.color[*v] == kFree) {
        r.color[*v] = s.color;
    } else if (r.color[*v] != s.color) {
        r.clashed.insert(*v);
    }
    return std::nullopt;
}

Outcome check_contradiction(const Replay& r, const cert::Contradiction& s) {
    if (s.vertex) {
        auto v = r.lookup(*s.vertex);
        if (!v) return "vector " + show(*s.vertex) + " is not in the set";
        if (!r.clashed.contains(*v)) return show(*s.vertex) + " has not been forced to both colors";
        return std::nullopt;
    }
    std::vector<Vertex> ctx;
    if (auto err = resolve_all(r, s.context, ctx)) return err;
    if (ctx.size() == 2) {
        if (!has_edge(r.g.graph, ctx[0], ctx[1])) return std::string("cited pair is not orthogonal");
        if (r.color[ctx[0]] == 1 && r.color[ctx[1]] == 1) return std::nullopt;
        return std::string("edge is not violated");
    }
    if (ctx.size() == 3) {
        if (!has_triple(r.g.graph, ctx[0], ctx[1], ctx[2])) return std::string("cited triple is not orthogonal");
        int ones = 0;
        int zeros = 0;
        for (Vertex u : ctx) {
            ones += r.color[u] == 1;
            zeros += r.color[u] == 0;
        }
        if (ones >= 2 || zeros == 3) return std::nullopt;
        return std::string("triple is not violated");
    }
    return std::string("contradiction needs a vertex or a context of 2 or 3 vectors");
}

// ---------------------------------------------------------------------------
// Text format

class LineReader {
public:
    LineReader(std::vector<std::string> tokens, std::size_t line) : toks_(std::move(tokens)), line_(line) {}

    bool done() const { return pos_ >= toks_.size(); }
    const std::string& peek() const { return toks_[pos_]; }

    void expect(const std::string& word) {
        if (done() || toks_[pos_] != word) fail("expected '" + word + "'");
        ++pos_;
    }

    bool accept(const std::string& word) {
        if (!done() && toks_[pos_] == word) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool next_is_int() const {
        if (done()) return false;
        Int v{};
        const auto& t = toks_[pos_];
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        return ec == std::errc() && p == t.data() + t.size();
    }

    Int integer() {
        if (!next_is_int()) fail("expected an integer");
        Int v{};
        const auto& t = toks_[pos_++];
        std::from_chars(t.data(), t.data() + t.size(), v);
        return v;
    }

    Vec3 vec() {
        const Int x = integer();
        const Int y = integer();
        const Int z = integer();
        return {x, y, z};
    }

    std::vector<Vec3> vecs() {
        std::vector<Vec3> out;
        while (next_is_int()) out.push_back(vec());
        return out;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("certificate line " + std::to_string(line_) + ": " + what);
    }

private:
    std::vector<std::string> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

cert::Step parse_step(LineReader& in) {
    if (in.accept("WLOG_FIX")) {
        cert::WlogFix s;
        in.expect("vertex");
        s.vertex = in.vec();
        in.expect("color");
        s.color = static_cast<int>(in.integer());
        while (in.accept("alt")) {
            cert::Alternative a;
            a.vertex = in.vec();
            in.expect("witness");
            for (auto& m : a.witness) m = in.integer();
            s.alternatives.push_back(a);
        }
        return s;
    }
    if (in.accept("PROPAGATE")) {
        cert::Propagate s;
        in.expect("context");
        s.context = in.vecs();
        in.expect("vertex");
        s.vertex = in.vec();
        in.expect("color");
        s.color = static_cast<int>(in.integer());
        return s;
    }
    if (in.accept("CONTRADICTION")) {
        cert::Contradiction s;
        if (in.accept("vertex")) {
            s.vertex = in.vec();
        } else {
            in.expect("context");
            s.context = in.vecs();
        }
        return s;
    }
    in.fail("unknown step kind '" + in.peek() + "'");
}

void put(std::ostream& os, const Vec3& v) { os << ' ' << v.x << ' ' << v.y << ' ' << v.z; }

}  // namespace

CertificateVerdict verify_certificate(const OrthoGraph& g, const Certificate& c) {
    Replay r(g);
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const auto& step = c.steps[i];
        Outcome err = std::visit(
            [&](const auto& s) -> Outcome {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, cert::WlogFix>) return check_wlog(r, s);
                if constexpr (std::is_same_v<T, cert::Propagate>) return check_propagate(r, s);
                if constexpr (std::is_same_v<T, cert::Contradiction>) return check_contradiction(r, s);
            },
            step);
        if (err) return {false, i, *err};
        if (std::holds_alternative<cert::Contradiction>(step)) {
            if (i + 1 != c.steps.size()) return {false, i + 1, "steps after the contradiction"};
            return {true, i, {}};
        }
    }
    return {false, c.steps.size(), "no contradiction reached"};
}

Certificate parse_certificate(const std::string& text) {
    Certificate c;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        LineReader in(std::move(toks), lineno);
        c.steps.push_back(parse_step(in));
        if (!in.done()) in.fail("trailing tokens");
    }
    return c;
}

std::string format_certificate(const Certificate& c) {
    std::ostringstream os;
    for (const auto& step : c.steps) {
        if (const auto* w = std::get_if<cert::WlogFix>(&step)) {
            os << "WLOG_FIX vertex";
            put(os, w->vertex);
            os << " color " << w->color;
            for (const auto& a : w->alternatives) {
                os << " alt";
                put(os, a.vertex);
                os << " witness";
                for (Int m : a.witness) os << ' ' << m;
            }
        } else if (const auto* p = std::get_if<cert::Propagate>(&step)) {
            os << "PROPAGATE context";
            for (const auto& v : p->context) put(os, v);
            os << " vertex";
            put(os, p->vertex);
            os << " color " << p->color;
        } else {
            const auto& x = std::get<cert::Contradiction>(step);
            os << "CONTRADICTION";
            if (x.vertex) {
                os << " vertex";
                put(os, *x.vertex);
            } else {
                os << " context";
                for (const auto& v : x.context) put(os, v);
            }
        }
        os << '\n';
    }
    return os.str();
}

const std::string& bundled_certificate_text() {
    static const std::string text(kBundledCertificate);
    return text;
}

}  // namespace ks
