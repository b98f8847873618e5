#pragma once
/*
vecset.hpp
----------
Exact integer 3-vectors: the sum-of-squares form, primitive/well-signed
normalization, the signed permutation group, the named Q_n sets and
height-bounded slices of S(N).

All arithmetic is int64. Entries up to 1e6 keep dot products and norms
below 3e12, far from overflow.
*/

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ks {

using Int = std::int64_t;

struct Vec3 {
    Int x = 0;
    Int y = 0;
    Int z = 0;

    constexpr Int operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    friend constexpr auto operator<=>(const Vec3&, const Vec3&) = default;
};

constexpr Int dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

// q(v) = x^2 + y^2 + z^2
constexpr Int norm_sq(const Vec3& v) { return dot(v, v); }

constexpr Int height(const Vec3& v) {
    auto a = [](Int t) { return t < 0 ? -t : t; };
    Int h = a(v.x);
    if (a(v.y) > h) h = a(v.y);
    if (a(v.z) > h) h = a(v.z);
    return h;
}

/// Sign rule selecting one of {v, -v}: a single nonzero entry is positive,
/// two nonzero entries start positive, three nonzero entries have at least
/// two positive. Throws std::domain_error on the zero vector.
bool is_well_signed(const Vec3& v);

bool is_primitive(const Vec3& v);

/// Throws std::domain_error if either argument is zero.
bool is_orthogonal(const Vec3& u, const Vec3& v);

/// Product of the distinct primes dividing n. Throws on n == 0.
Int radical(Int n);

bool is_squarefree(Int n);

/// A primitive, well-signed, nonzero vector. One per line through the origin.
class PrimVec {
public:
    /// Divides out the content and fixes the sign. Throws on zero.
    static PrimVec canonicalize(const Vec3& v);

    /// Accepts v only if it is already canonical.
    static std::optional<PrimVec> from_canonical(const Vec3& v);

    const Vec3& vec() const { return v_; }
    Int x() const { return v_.x; }
    Int y() const { return v_.y; }
    Int z() const { return v_.z; }
    Int q() const { return norm_sq(v_); }

    friend auto operator<=>(const PrimVec&, const PrimVec&) = default;

private:
    explicit PrimVec(const Vec3& v) : v_(v) {}
    Vec3 v_;
};

inline PrimVec canonicalize(const Vec3& v) { return PrimVec::canonicalize(v); }

/// Element of the signed permutation group (order 48): row i of the matrix
/// has `sign[i]` in column `perm[i]`, so (g v)_i = sign[i] * v[perm[i]].
class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::array<int, 3> perm, std::array<int, 3> sign);

    /// Throws std::invalid_argument unless the matrix has exactly one
    /// nonzero entry, equal to +-1, in every row and column.
    static SignedPermutation from_matrix(const std::array<Int, 9>& rowmajor);

    static SignedPermutation identity() { return {}; }
    static const std::vector<SignedPermutation>& all();

    Vec3 apply(const Vec3& v) const;
    std::array<Int, 9> matrix() const;
    SignedPermutation inverse() const;
    SignedPermutation operator*(const SignedPermutation& rhs) const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::array<int, 3> perm_{0, 1, 2};
    std::array<int, 3> sign_{1, 1, 1};
};

/// canonicalize(g * v)
PrimVec apply_symmetry(const SignedPermutation& g, const PrimVec& v);

/// Sorted, duplicate-free list of PrimVec plus where it came from.
class VectorSet {
public:
    struct Meta {
        std::string name;
        std::optional<Int> N;
        std::optional<Int> H;
        friend bool operator==(const Meta&, const Meta&) = default;
    };

    VectorSet() = default;
    /// Canonicalizes every input; collinear vectors merge silently.
    explicit VectorSet(std::span<const Vec3> vs, Meta meta = {});
    explicit VectorSet(std::vector<PrimVec> vs, Meta meta = {});

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const PrimVec& operator[](std::size_t i) const { return items_[i]; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    std::span<const PrimVec> items() const { return items_; }

    std::optional<std::size_t> index_of(const PrimVec& v) const;
    bool contains(const PrimVec& v) const { return index_of(v).has_value(); }
    bool contains(const Vec3& v) const;
    bool includes(const VectorSet& other) const;

    /// True if g maps the set onto itself.
    bool invariant_under(const SignedPermutation& g) const;
    VectorSet transformed(const SignedPermutation& g) const;

    const Meta& meta() const { return meta_; }
    Meta& meta() { return meta_; }

    friend bool operator==(const VectorSet& a, const VectorSet& b) { return a.items_ == b.items_; }

private:
    std::vector<PrimVec> items_;
    Meta meta_;
};

VectorSet set_union(const VectorSet& a, const VectorSet& b, std::string name = {});

inline constexpr std::array<Int, 7> kQParts{1, 2, 3, 6, 21, 33, 77};

/// Q_n for n in {1,2,3,6,21,33,77}. The last two are defined by the absolute
/// entry multisets {2,2,5} and {2,3,8}, not by the value of q alone.
VectorSet build_Qn(Int n);

/// The 85-vector union of all Q_n.
VectorSet build_Q();

/// Primitive well-signed v with height(v) <= H and radical(q(v)) | N.
/// N must be squarefree and positive, H >= 1. OpenMP over the first coordinate.
VectorSet enumerate_S(Int N, Int H);

/// Same result as enumerate_S, single-threaded.
VectorSet enumerate_S_serial(Int N, Int H);

/// radical(q) divides N, i.e. q divides a power of N.
bool q_in_S(Int q, Int N);

}  // namespace ks
