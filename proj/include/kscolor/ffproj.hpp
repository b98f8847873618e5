#pragma once
/*
ffproj.hpp
----------
Projections (symmetric idempotents) in M_3(F_p) and their two-valued
colorings. Also the reduction of integer vectors to rank-1 projections
mod p, P_v = q(v)^-1 v v^T.
*/

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kscolor/kssolver.hpp"
#include "kscolor/vecset.hpp"

namespace ks {

inline constexpr unsigned kMaxPrime = 101;

bool is_prime(Int n);

/// 3x3 matrix over F_p, row-major, entries reduced to [0, p).
struct FpMatrix {
    unsigned p = 2;
    std::array<unsigned, 9> e{};

    static FpMatrix zero(unsigned p);
    static FpMatrix identity(unsigned p);
    static FpMatrix scalar(unsigned p, Int s);
    /// Reduces arbitrary integers mod p.
    static FpMatrix from_ints(unsigned p, std::span<const Int> entries);

    unsigned operator()(int r, int c) const { return e[static_cast<std::size_t>(r * 3 + c)]; }

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix transpose() const;
    bool is_symmetric() const { return *this == transpose(); }
    bool is_idempotent() const { return *this * *this == *this; }
    unsigned rank() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
    friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;
};

/// Symmetric idempotent. Construction checks both properties.
class FpProjection {
public:
    explicit FpProjection(const FpMatrix& m);
    const FpMatrix& matrix() const { return m_; }
    unsigned p() const { return m_.p; }
    unsigned rank() const { return m_.rank(); }
    friend bool operator==(const FpProjection&, const FpProjection&) = default;
    friend auto operator<=>(const FpProjection&, const FpProjection&) = default;

private:
    FpMatrix m_;
};

/// Proj(M_3(F_p)): elements sorted by entries, with complement and the
/// commuting pairs (i < j).
struct ProjAlgebra {
    unsigned p = 2;
    std::vector<FpMatrix> elements;
    std::size_t zero = 0;
    std::size_t identity = 0;
    std::vector<std::size_t> complement;  // index of I - e
    std::vector<std::array<std::uint32_t, 2>> commuting;

    std::optional<std::size_t> index_of(const FpMatrix& m) const;
    std::size_t count_rank(unsigned r) const;
};

/// Scans all p^6 symmetric matrices, OpenMP over the leading entries.
/// Throws std::domain_error unless p is a prime <= kMaxPrime.
ProjAlgebra enumerate_projections(unsigned p);
ProjAlgebra enumerate_projections_serial(unsigned p);

struct BaSearchResult {
    bool sat = false;
    std::vector<std::int8_t> coloring;  // per element of the algebra
    SolveStats stats;
};

/// Two-valued homomorphism: c(0)=0, c(I)=1, c(I-e)=1-c(e), and for every
/// commuting pair c(ef)=c(e)c(f), c(e+f-ef)=max(c(e),c(f)).
BaSearchResult search_ba_coloring(const ProjAlgebra& a);
bool verify_ba_coloring(const ProjAlgebra& a, std::span<const std::int8_t> c);

/// q(v)^-1 v v^T mod p. Throws std::domain_error if p | q(v).
FpProjection project_mod_p(const PrimVec& v, unsigned p);

struct Reduction {
    unsigned p = 2;
    std::vector<FpProjection> projections;  // sorted, duplicates merged
    bool collided = false;                  // two input vectors shared an image
};

/// Throws std::domain_error naming the first vector with p | q(v).
Reduction reduce_set_mod_p(const VectorSet& s, unsigned p);

struct ProjectionSearch {
    ContextGraph graph;  // vertex i is the i-th input projection
    SolveResult result;
};

/// KS search on a family of rank-1 projections: pairs with ef = 0 are edges,
/// triples with pairwise zero products summing to I are contexts. Throws
/// std::domain_error on mixed primes or a projection that is not rank 1.
ProjectionSearch restricted_ks_search(std::span<const FpProjection> projs);

/// 31 * 5 - 2 * 77 = 1, and the same identity on scalar matrices in M_3(F_p)
/// for the primes up to kMaxPrime other than 2, 3, 7, 11.
bool bezout_check();

}  // namespace ks
