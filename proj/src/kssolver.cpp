#include "kscolor/kssolver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace ks {

namespace {

constexpr std::int8_t kFree = -1;

// Assignment state with a trail for undo. The trail doubles as the
// propagation queue.
class Propagator {
public:
    explicit Propagator(const ContextGraph& g)
        : g_(g), nbrs_(g.vertex_count), in_triples_(g.vertex_count), val_(g.vertex_count, kFree) {
        for (const auto& e : g.edges) {
            nbrs_[e[0]].push_back(e[1]);
            nbrs_[e[1]].push_back(e[0]);
        }
        for (std::uint32_t t = 0; t < g.triples.size(); ++t)
            for (Vertex v : g.triples[t]) in_triples_[v].push_back(t);
    }

    std::int8_t value(Vertex v) const { return val_[v]; }
    const std::vector<std::int8_t>& values() const { return val_; }
    std::size_t mark() const { return trail_.size(); }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            val_[trail_.back()] = kFree;
            trail_.pop_back();
        }
        head_ = std::min(head_, mark);
    }

    // Assigns and propagates to fixpoint; false on conflict. On conflict the
    // caller undoes to its own mark.
    bool decide(Vertex v, std::int8_t c) { return set(v, c) && propagate(); }

    // Unassigned vertex in the most triples without a 1; kNone once every
    // triple holds a 1.
    Vertex pick_branch() const {
        scores_.assign(g_.vertex_count, 0);
        bool any = false;
        for (const auto& t : g_.triples) {
            if (val_[t[0]] == 1 || val_[t[1]] == 1 || val_[t[2]] == 1) continue;
            for (Vertex v : t)
                if (val_[v] == kFree) {
                    ++scores_[v];
                    any = true;
                }
        }
        if (!any) return kNone;
        Vertex best = 0;
        for (Vertex v = 1; v < g_.vertex_count; ++v)
            if (scores_[v] > scores_[best]) best = v;
        return best;
    }

    Coloring completed() const {
        Coloring c(val_.size());
        for (std::size_t i = 0; i < val_.size(); ++i) c[i] = val_[i] == 1 ? 1 : 0;
        return c;
    }

    std::uint64_t propagations = 0;
    static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

private:
    bool set(Vertex v, std::int8_t c) {
        if (val_[v] == c) return true;
        if (val_[v] != kFree) return false;
        val_[v] = c;
        trail_.push_back(v);
        return true;
    }

    bool imply(Vertex v, std::int8_t c) {
        if (val_[v] == kFree) ++propagations;
        return set(v, c);
    }

    bool propagate() {
        while (head_ < trail_.size()) {
            const Vertex v = trail_[head_++];
            if (val_[v] == 1) {
                for (Vertex u : nbrs_[v])
                    if (!imply(u, 0)) return false;
                continue;
            }
            for (std::uint32_t ti : in_triples_[v]) {
                const auto& t = g_.triples[ti];
                Vertex a = t[0] == v ? t[1] : t[0];
                Vertex b = t[2] == v ? t[1] : t[2];
                if (val_[a] == 1 || val_[b] == 1) continue;
                if (val_[a] == 0 && val_[b] == 0) return false;
                if (val_[a] == 0 && !imply(b, 1)) return false;
                if (val_[b] == 0 && !imply(a, 1)) return false;
            }
        }
        return true;
    }

    const ContextGraph& g_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::vector<std::vector<std::uint32_t>> in_triples_;
    std::vector<std::int8_t> val_;
    std::vector<Vertex> trail_;
    std::size_t head_ = 0;
    mutable std::vector<std::uint32_t> scores_;
};

struct Search {
    Propagator& prop;
    SolveStats& stats;
    // Parallel subtree index; the search gives up once a lower-indexed
    // subtree has a solution.
    const std::atomic<long>* first_sat = nullptr;
    long me = 0;

    bool run(std::size_t depth) {
        stats.max_depth = std::max(stats.max_depth, depth);
        if (first_sat && first_sat->load(std::memory_order_relaxed) < me) return false;
        const Vertex v = prop.pick_branch();
        if (v == Propagator::kNone) return true;
        for (std::int8_t c : {std::int8_t{1}, std::int8_t{0}}) {
            const auto m = prop.mark();
            ++stats.nodes;
            if (prop.decide(v, c) && run(depth + 1)) return true;
            prop.undo(m);
        }
        return false;
    }
};

bool apply_assumptions(Propagator& prop, std::span<const Assumption> assumptions, std::size_t n) {
    for (const auto& a : assumptions) {
        if (a.vertex >= n || (a.color != 0 && a.color != 1))
            throw std::invalid_argument("solve: bad assumption");
        if (!prop.decide(a.vertex, a.color)) return false;
    }
    return true;
}

void finish(SolveResult& r, const Propagator& prop, bool sat) {
    r.sat = sat;
    r.stats.propagations += prop.propagations;
    if (sat) r.coloring = prop.completed();
}

std::vector<Assumption> wlog_assumptions(const OrthoGraph& g, const SolveOptions& opts) {
    std::vector<Assumption> out;
    if (!opts.wlog) return out;
    for (const auto& f : symmetry_fixes(g)) out.push_back({f.vertex, 1});
    return out;
}

// A subtree root for the parallel split: the decisions leading to it.
using Prefix = std::vector<Assumption>;

void collect_prefixes(Propagator& prop, Prefix& path, unsigned depth, std::vector<Prefix>& out) {
    if (depth == 0) {
        out.push_back(path);
        return;
    }
    const Vertex v = prop.pick_branch();
    if (v == Propagator::kNone) {
        // Already a solution; it must keep its place in DFS order.
        out.push_back(path);
        return;
    }
    for (std::int8_t c : {std::int8_t{1}, std::int8_t{0}}) {
        const auto m = prop.mark();
        if (prop.decide(v, c)) {
            path.push_back({v, c});
            collect_prefixes(prop, path, depth - 1, out);
            path.pop_back();
        }
        prop.undo(m);
    }
}

}  // namespace

bool verify_coloring(const ContextGraph& g, const Coloring& c) {
    if (c.size() != g.vertex_count) throw std::domain_error("verify_coloring: coloring is not total");
    for (auto x : c)
        if (x != 0 && x != 1) throw std::domain_error("verify_coloring: colors must be 0 or 1");
    for (const auto& e : g.edges)
        if (c[e[0]] + c[e[1]] > 1) return false;
    for (const auto& t : g.triples)
        if (c[t[0]] + c[t[1]] + c[t[2]] != 1) return false;
    return true;
}

SolveResult solve(const ContextGraph& g, std::span<const Assumption> assumptions) {
    SolveResult r;
    Propagator prop(g);
    if (!apply_assumptions(prop, assumptions, g.vertex_count)) {
        finish(r, prop, false);
        return r;
    }
    Search s{prop, r.stats};
    finish(r, prop, s.run(0));
    return r;
}

SolveResult solve(const OrthoGraph& g, const SolveOptions& opts) {
    const auto fixes = wlog_assumptions(g, opts);
    auto r = solve(g.graph, fixes);
    r.stats.wlog_fixes = fixes.size();
    return r;
}

SolveResult solve_parallel(const ContextGraph& g, std::span<const Assumption> assumptions, unsigned split_depth) {
    SolveResult r;
    std::vector<Prefix> tasks;
    {
        Propagator prop(g);
        if (!apply_assumptions(prop, assumptions, g.vertex_count)) {
            finish(r, prop, false);
            return r;
        }
        Prefix path;
        collect_prefixes(prop, path, split_depth, tasks);
        r.stats.propagations += prop.propagations;
    }

    const long count = static_cast<long>(tasks.size());
    std::atomic<long> first_sat{count};
    std::vector<SolveStats> stats(tasks.size());
    std::vector<Coloring> colorings(tasks.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        if (i > first_sat.load()) continue;
        auto& st = stats[static_cast<std::size_t>(i)];
        Propagator prop(g);
        apply_assumptions(prop, assumptions, g.vertex_count);
        for (const auto& a : tasks[static_cast<std::size_t>(i)]) prop.decide(a.vertex, a.color);
        Search s{prop, st, &first_sat, i};
        const bool sat = s.run(tasks[static_cast<std::size_t>(i)].size());
        st.propagations += prop.propagations;
        if (sat) {
            colorings[static_cast<std::size_t>(i)] = prop.completed();
            long cur = first_sat.load();
            while (i < cur && !first_sat.compare_exchange_weak(cur, i)) {
            }
        }
    }

    for (const auto& st : stats) {
        r.stats.nodes += st.nodes;
        r.stats.propagations += st.propagations;
        r.stats.max_depth = std::max(r.stats.max_depth, st.max_depth);
    }
    const long winner = first_sat.load();
    r.sat = winner < count;
    if (r.sat) r.coloring = std::move(colorings[static_cast<std::size_t>(winner)]);
    return r;
}

SolveResult solve_parallel(const OrthoGraph& g, const SolveOptions& opts) {
    const auto fixes = wlog_assumptions(g, opts);
    auto r = solve_parallel(g.graph, fixes, opts.split_depth);
    r.stats.wlog_fixes = fixes.size();
    return r;
}

SolveResult solve_bruteforce(const ContextGraph& g) {
    const std::size_t n = g.vertex_count;
    if (n > kBruteForceLimit)
        throw std::length_error("solve_bruteforce: refusing more than " + std::to_string(kBruteForceLimit) +
                                " vertices");
    // Bit (n-1-i) holds vertex i so increasing masks are lexicographic.
    auto bit = [n](Vertex v) { return std::uint64_t{1} << (n - 1 - v); };
    std::vector<std::uint64_t> nbr_mask(n, 0);
    for (const auto& e : g.edges) {
        nbr_mask[e[0]] |= bit(e[1]);
        nbr_mask[e[1]] |= bit(e[0]);
    }
    std::vector<std::uint64_t> triple_mask;
    for (const auto& t : g.triples) triple_mask.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));

    SolveResult r;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m) {
        ++r.stats.nodes;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v)
            if ((m & bit(static_cast<Vertex>(v))) && (m & nbr_mask[v])) ok = false;
        for (std::size_t t = 0; t < triple_mask.size() && ok; ++t)
            if ((m & triple_mask[t]) == 0) ok = false;
        if (!ok) continue;
        r.sat = true;
        r.coloring.resize(n);
        for (std::size_t v = 0; v < n; ++v) r.coloring[v] = (m & bit(static_cast<Vertex>(v))) ? 1 : 0;
        return r;
    }
    return r;
}

std::vector<SignedPermutation> automorphisms(const VectorSet& s) {
    std::vector<SignedPermutation> out;
    for (const auto& g : SignedPermutation::all())
        if (s.invariant_under(g)) out.push_back(g);
    return out;
}

std::vector<WlogFix> symmetry_fixes(const OrthoGraph& g) {
    const auto group = automorphisms(g.vertices);
    std::vector<WlogFix> fixes;
    if (group.size() <= 1) return fixes;

    const std::size_t n = g.size();
    std::vector<std::vector<Vertex>> image(group.size(), std::vector<Vertex>(n));
    for (std::size_t k = 0; k < group.size(); ++k)
        for (Vertex v = 0; v < n; ++v)
            image[k][v] = static_cast<Vertex>(*g.vertices.index_of(apply_symmetry(group[k], g.vertices[v])));

    Propagator prop(g.graph);
    for (;;) {
        std::vector<std::size_t> stabilizer;
        for (std::size_t k = 0; k < group.size(); ++k) {
            bool keeps = true;
            for (Vertex v = 0; v < n && keeps; ++v)
                if (prop.value(v) != kFree && prop.value(image[k][v]) != prop.value(v)) keeps = false;
            if (keeps) stabilizer.push_back(k);
        }

        bool fixed = false;
        for (const auto& t : g.graph.triples) {
            if (prop.value(t[0]) == 1 || prop.value(t[1]) == 1 || prop.value(t[2]) == 1) continue;
            std::vector<Vertex> open;
            for (Vertex v : t)
                if (prop.value(v) == kFree) open.push_back(v);
            if (open.size() < 2) continue;

            WlogFix fix{open[0], {}};
            for (std::size_t a = 1; a < open.size(); ++a) {
                auto it = std::find_if(stabilizer.begin(), stabilizer.end(),
                                       [&](std::size_t k) { return image[k][open[a]] == open[0]; });
                if (it == stabilizer.end()) break;
                fix.alternatives.push_back({open[a], group[*it]});
            }
            if (fix.alternatives.size() + 1 != open.size()) continue;

            fixes.push_back(std::move(fix));
            fixed = true;
            if (!prop.decide(open[0], 1)) return fixes;
            break;
        }
        if (!fixed) return fixes;
    }
}

CnfFormula export_cnf(const ContextGraph& g) {
    CnfFormula f;
    f.variables = g.vertex_count;
    f.clauses.reserve(g.triples.size() + g.edges.size());
    auto var = [](Vertex v) { return static_cast<int>(v) + 1; };
    for (const auto& t : g.triples) f.clauses.push_back({var(t[0]), var(t[1]), var(t[2])});
    for (const auto& e : g.edges) f.clauses.push_back({-var(e[0]), -var(e[1])});
    return f;
}

}  // namespace ks
