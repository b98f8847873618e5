#pragma once
/*
kssolver.hpp
------------
Kochen-Specker colorability of a context graph.

solve() is depth-first backtracking with unit propagation after every
decision. The branching vertex is the unassigned vertex lying in the most
unsatisfied triples (lowest index on ties), tried with 1 first. When every
triple holds a 1 the remaining free vertices are colored 0.

solve_parallel() splits the top of that search tree into subtrees and runs
them under OpenMP. The verdict and the SAT coloring are the ones solve()
would return; only the statistics differ.
*/

#include <cstdint>
#include <span>
#include <vector>

#include "kscolor/orthograph.hpp"

namespace ks {

/// One entry per vertex, each 0 or 1.
using Coloring = std::vector<std::int8_t>;

struct SolveStats {
    std::uint64_t nodes = 0;         // branch attempts
    std::uint64_t propagations = 0;  // implied assignments
    std::size_t max_depth = 0;
    std::size_t wlog_fixes = 0;
};

struct SolveResult {
    bool sat = false;
    Coloring coloring;  // empty when UNSAT
    SolveStats stats;
};

/// Vertex pinned to a color before search.
struct Assumption {
    Vertex vertex;
    std::int8_t color;
};

struct SolveOptions {
    /// Symmetry breaking for sets closed under signed permutations. Only used
    /// by the OrthoGraph overloads.
    bool wlog = false;
    /// Depth at which solve_parallel hands subtrees to threads.
    unsigned split_depth = 8;
};

/// Every edge has at most one 1, every triple exactly one 1.
/// Throws std::domain_error if c is not a total 0/1 assignment.
bool verify_coloring(const ContextGraph& g, const Coloring& c);

SolveResult solve(const ContextGraph& g, std::span<const Assumption> assumptions = {});
SolveResult solve(const OrthoGraph& g, const SolveOptions& opts = {});

SolveResult solve_parallel(const ContextGraph& g, std::span<const Assumption> assumptions = {},
                           unsigned split_depth = 8);
SolveResult solve_parallel(const OrthoGraph& g, const SolveOptions& opts = {});

inline constexpr std::size_t kBruteForceLimit = 25;

/// Exhaustive scan of all 2^n assignments; returns the lexicographically
/// least coloring (vertex 0 most significant). Throws std::length_error
/// above kBruteForceLimit vertices.
SolveResult solve_bruteforce(const ContextGraph& g);

// ---------------------------------------------------------------------------
// Symmetry breaking

struct SymmetryWitness {
    Vertex vertex;  // the alternative that is mapped onto the fixed vertex
    SignedPermutation g;
};

struct WlogFix {
    Vertex vertex;  // colored 1
    std::vector<SymmetryWitness> alternatives;
};

/// Signed permutations mapping the vertex set onto itself.
std::vector<SignedPermutation> automorphisms(const VectorSet& s);

/// Greedy chain of "without loss of generality" fixes. Each fix picks a
/// triple with no 1 whose free members form one orbit of the symmetries
/// that preserve everything assigned so far, and colors the first of them 1.
/// Empty when the set has only the trivial symmetry.
std::vector<WlogFix> symmetry_fixes(const OrthoGraph& g);

// ---------------------------------------------------------------------------
// CNF export

struct CnfFormula {
    std::size_t variables = 0;  // variable i+1 is vertex i
    std::vector<std::vector<int>> clauses;
};

/// One (i | j | k) per triple, then one (-i | -j) per edge.
CnfFormula export_cnf(const ContextGraph& g);

}  // namespace ks
