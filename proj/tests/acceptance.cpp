// Acceptance suite: one PASS/FAIL line per criterion with its wall time and
// budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cert_mutations.hpp"
#include "kscolor/certificate.hpp"
#include "kscolor/ffproj.hpp"
#include "kscolor/kssolver.hpp"
#include "oracles.hpp"

using namespace ks;

namespace {

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
        err = body();
    } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (err.empty() && dt > budget_s) err = "over time budget";
    const bool ok = err.empty();
    if (!ok) ++failures;
    std::printf("%s %d %-34s %9.3fs / %gs%s%s\n", ok ? "PASS" : "FAIL", id, title, dt, budget_s, ok ? "" : "  ",
                err.c_str());
    std::fflush(stdout);
}

std::string unsat(const OrthoGraph& g, SolveOptions opts = {}) {
    return solve(g, opts).sat ? "expected UNSAT, got SAT" : "";
}

}  // namespace

int main() {
    criterion(1, "construction of the 85-vector set", 1, [] {
        const auto q = build_Q();
        if (q.size() != 85) return std::string("size ") + std::to_string(q.size());
        const std::size_t want[] = {3, 6, 4, 12, 24, 12, 24};
        std::size_t i = 0;
        for (Int n : kQParts) {
            std::size_t count = 0;
            for (const auto& v : q) count += v.q() == n;
            if (count != want[i++] || build_Qn(n).size() != count) return "part q=" + std::to_string(n);
        }
        return std::string();
    });

    const auto qg = build_graph(build_Q());

    criterion(2, "Q uncolorable, with symmetry fixes", 10, [&] {
        SolveOptions o;
        o.wlog = true;
        return unsat(qg, o);
    });
    criterion(2, "Q uncolorable, plain search", 600, [&] { return unsat(qg); });

    criterion(3, "certificate replay and mutations", 1, [&] {
        const auto c = parse_certificate(bundled_certificate_text());
        const auto v = verify_certificate(qg, c);
        if (!v.valid) return "bundled certificate invalid at step " + std::to_string(v.step) + ": " + v.reason;
        const auto ms = mutations::all(qg, c);
        if (ms.size() < c.steps.size()) return std::string("too few mutants");
        for (const auto& m : ms) {
            const auto mv = verify_certificate(qg, m.cert);
            if (mv.valid || mv.step != m.step) return "mutant accepted or misplaced: " + m.label;
        }
        return std::string();
    });

    criterion(4, "superset S(462), height 8", 300, [] {
        const auto s = enumerate_S(462, 8);
        if (!s.includes(build_Q())) return std::string("does not contain Q");
        return unsat(build_graph(s));
    });

    criterion(5, "colorable slices at height 15", 600, [] {
        for (Int N : {1, 5, 7, 35}) {
            const auto g = build_graph(enumerate_S(N, 15));
            const auto r = solve(g);
            if (!r.sat) return "N=" + std::to_string(N) + " UNSAT";
            if (!verify_coloring(g.graph, r.coloring)) return "N=" + std::to_string(N) + " bad coloring";
        }
        return std::string();
    });

    criterion(6, "finite-field colorings, p <= 7", 300, [] {
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            const auto a = enumerate_projections(p);
            const auto r = search_ba_coloring(a);
            if (r.sat != (p <= 3)) return "wrong verdict at p=" + std::to_string(p);
            if (r.sat && !verify_ba_coloring(a, r.coloring)) return "bad coloring at p=" + std::to_string(p);
        }
        return std::string();
    });

    criterion(7, "Q reduced mod 5", 60, [] {
        const auto red = reduce_set_mod_p(build_Q(), 5);
        return restricted_ks_search(red.projections).result.sat ? std::string("expected UNSAT") : std::string();
    });

    criterion(8, "solver vs brute force vs CNF", 600, [] {
        std::mt19937_64 rng(2718);
        const auto q = build_Q();
        const auto s = enumerate_S(462, 8);
        for (int round = 0; round < 240; ++round) {
            const auto& pool = round % 2 ? q : s;
            std::vector<PrimVec> items(pool.begin(), pool.end());
            std::shuffle(items.begin(), items.end(), rng);
            items.erase(items.begin() + static_cast<long>(2 + rng() % 17), items.end());
            const auto g = build_graph(VectorSet(items));
            const bool a = solve(g.graph).sat;
            const bool b = solve_bruteforce(g.graph).sat;
            const auto f = export_cnf(g.graph);
            const bool c = oracle::cnf_satisfiable(f.variables, f.clauses);
            if (a != b || b != c) return "disagreement in round " + std::to_string(round);
        }
        return std::string();
    });

    criterion(9, "normalization laws", 10, [] {
        std::mt19937_64 rng(141421);
        std::uniform_int_distribution<Int> d(-100, 100);
        int done = 0;
        while (done < 10000) {
            const Vec3 v{d(rng), d(rng), d(rng)};
            if (v.is_zero()) continue;
            ++done;
            const auto c = canonicalize(v);
            if (canonicalize(c.vec()) != c) return std::string("canonicalize not idempotent");
            if (is_well_signed(v) == is_well_signed(-v)) return std::string("well-signed law broken");
            for (const auto& g : SignedPermutation::all())
                if (norm_sq(g.apply(v)) != norm_sq(v)) return std::string("q not invariant");
        }
        return std::string();
    });

    std::printf("%s\n", failures ? "SOME CRITERIA FAILED" : "ALL CRITERIA PASSED");
    return failures ? 1 : 0;
}
