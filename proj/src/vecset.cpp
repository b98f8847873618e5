#include "kscolor/vecset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ks {

namespace {

Int iabs(Int t) { return t < 0 ? -t : t; }

void require_nonzero(const Vec3& v, const char* what) {
    if (v.is_zero()) throw std::domain_error(std::string(what) + ": zero vector");
}

Int content(const Vec3& v) { return std::gcd(std::gcd(iabs(v.x), iabs(v.y)), iabs(v.z)); }

}  // namespace

bool is_well_signed(const Vec3& v) {
    require_nonzero(v, "is_well_signed");
    int nonzero = 0;
    int positive = 0;
    Int first = 0;
    for (int i = 0; i < 3; ++i) {
        if (v[i] == 0) continue;
        if (nonzero == 0) first = v[i];
        ++nonzero;
        if (v[i] > 0) ++positive;
    }
    switch (nonzero) {
        case 1:
        case 2:
            return first > 0;
        default:
            return positive >= 2;
    }
}

bool is_primitive(const Vec3& v) { return !v.is_zero() && content(v) == 1; }

bool is_orthogonal(const Vec3& u, const Vec3& v) {
    require_nonzero(u, "is_orthogonal");
    require_nonzero(v, "is_orthogonal");
    return dot(u, v) == 0;
}

Int radical(Int n) {
    if (n <= 0) throw std::domain_error("radical: argument must be positive");
    Int r = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        r *= p;
        while (n % p == 0) n /= p;
    }
    return n > 1 ? r * n : r;
}

bool is_squarefree(Int n) { return n > 0 && radical(n) == n; }

bool q_in_S(Int q, Int N) {
    if (q <= 0) return false;
    for (Int g = std::gcd(q, N); g > 1; g = std::gcd(q, N)) {
        while (q % g == 0) q /= g;
    }
    return q == 1;
}

PrimVec PrimVec::canonicalize(const Vec3& v) {
    require_nonzero(v, "canonicalize");
    const Int c = content(v);
    Vec3 w{v.x / c, v.y / c, v.z / c};
    if (!is_well_signed(w)) w = -w;
    return PrimVec(w);
}

std::optional<PrimVec> PrimVec::from_canonical(const Vec3& v) {
    if (v.is_zero() || !is_primitive(v) || !is_well_signed(v)) return std::nullopt;
    return PrimVec(v);
}

// ---------------------------------------------------------------------------

SignedPermutation::SignedPermutation(std::array<int, 3> perm, std::array<int, 3> sign)
    : perm_(perm), sign_(sign) {
    std::array<bool, 3> seen{};
    for (int i = 0; i < 3; ++i) {
        if (perm[i] < 0 || perm[i] > 2 || seen[perm[i]])
            throw std::invalid_argument("SignedPermutation: not a permutation");
        seen[perm[i]] = true;
        if (sign[i] != 1 && sign[i] != -1)
            throw std::invalid_argument("SignedPermutation: sign must be +-1");
    }
}

SignedPermutation SignedPermutation::from_matrix(const std::array<Int, 9>& m) {
    std::array<int, 3> perm{};
    std::array<int, 3> sign{};
    std::array<int, 3> col_hits{};
    for (int r = 0; r < 3; ++r) {
        int hits = 0;
        for (int c = 0; c < 3; ++c) {
            const Int e = m[r * 3 + c];
            if (e == 0) continue;
            if (e != 1 && e != -1)
                throw std::invalid_argument("signed permutation entries must be 0 or +-1");
            ++hits;
            ++col_hits[c];
            perm[r] = c;
            sign[r] = static_cast<int>(e);
        }
        if (hits != 1) throw std::invalid_argument("signed permutation row needs exactly one nonzero");
    }
    for (int c : col_hits)
        if (c != 1) throw std::invalid_argument("signed permutation column needs exactly one nonzero");
    return {perm, sign};
}

const std::vector<SignedPermutation>& SignedPermutation::all() {
    static const std::vector<SignedPermutation> group = [] {
        std::vector<SignedPermutation> g;
        std::array<int, 3> p{0, 1, 2};
        do {
            for (int mask = 0; mask < 8; ++mask) {
                g.emplace_back(p, std::array<int, 3>{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1,
                                                     mask & 4 ? -1 : 1});
            }
        } while (std::next_permutation(p.begin(), p.end()));
        return g;
    }();
    return group;
}

Vec3 SignedPermutation::apply(const Vec3& v) const {
    return {sign_[0] * v[perm_[0]], sign_[1] * v[perm_[1]], sign_[2] * v[perm_[2]]};
}

std::array<Int, 9> SignedPermutation::matrix() const {
    std::array<Int, 9> m{};
    for (int r = 0; r < 3; ++r) m[r * 3 + perm_[r]] = sign_[r];
    return m;
}

SignedPermutation SignedPermutation::inverse() const {
    std::array<int, 3> p{};
    std::array<int, 3> s{};
    for (int i = 0; i < 3; ++i) {
        p[perm_[i]] = i;
        s[perm_[i]] = sign_[i];
    }
    return {p, s};
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
    std::array<int, 3> p{};
    std::array<int, 3> s{};
    for (int i = 0; i < 3; ++i) {
        p[i] = rhs.perm_[perm_[i]];
        s[i] = sign_[i] * rhs.sign_[perm_[i]];
    }
    return {p, s};
}

PrimVec apply_symmetry(const SignedPermutation& g, const PrimVec& v) {
    return canonicalize(g.apply(v.vec()));
}

// ---------------------------------------------------------------------------

VectorSet::VectorSet(std::span<const Vec3> vs, Meta meta) : meta_(std::move(meta)) {
    items_.reserve(vs.size());
    for (const auto& v : vs) items_.push_back(canonicalize(v));
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VectorSet::VectorSet(std::vector<PrimVec> vs, Meta meta) : items_(std::move(vs)), meta_(std::move(meta)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

std::optional<std::size_t> VectorSet::index_of(const PrimVec& v) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - items_.begin());
}

bool VectorSet::contains(const Vec3& v) const {
    if (v.is_zero()) return false;
    return contains(canonicalize(v));
}

bool VectorSet::includes(const VectorSet& other) const {
    return std::includes(items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
}

bool VectorSet::invariant_under(const SignedPermutation& g) const {
    return std::all_of(items_.begin(), items_.end(),
                       [&](const PrimVec& v) { return contains(apply_symmetry(g, v)); });
}

VectorSet VectorSet::transformed(const SignedPermutation& g) const {
    std::vector<PrimVec> out;
    out.reserve(items_.size());
    for (const auto& v : items_) out.push_back(apply_symmetry(g, v));
    return VectorSet(std::move(out), meta_);
}

VectorSet set_union(const VectorSet& a, const VectorSet& b, std::string name) {
    std::vector<PrimVec> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return VectorSet(std::move(all), {std::move(name), std::nullopt, std::nullopt});
}

// ---------------------------------------------------------------------------

namespace {

VectorSet orbit_of(const Vec3& base, Int n) {
    std::vector<PrimVec> out;
    for (const auto& g : SignedPermutation::all()) out.push_back(canonicalize(g.apply(base)));
    return VectorSet(std::move(out), {"Q_" + std::to_string(n), std::nullopt, std::nullopt});
}

}  // namespace

VectorSet build_Qn(Int n) {
    switch (n) {
        case 33:
            return orbit_of({2, 2, 5}, n);
        case 77:
            return orbit_of({2, 3, 8}, n);
        case 1:
        case 2:
        case 3:
        case 6:
        case 21:
            break;
        default:
            throw std::domain_error("build_Qn: n must be one of 1, 2, 3, 6, 21, 33, 77");
    }
    Int bound = 0;
    while ((bound + 1) * (bound + 1) <= n) ++bound;
    std::vector<PrimVec> out;
    for (Int x = -bound; x <= bound; ++x)
        for (Int y = -bound; y <= bound; ++y)
            for (Int z = -bound; z <= bound; ++z) {
                const Vec3 v{x, y, z};
                if (norm_sq(v) != n) continue;
                if (auto p = PrimVec::from_canonical(v)) out.push_back(*p);
            }
    return VectorSet(std::move(out), {"Q_" + std::to_string(n), std::nullopt, std::nullopt});
}

VectorSet build_Q() {
    std::vector<PrimVec> all;
    for (Int n : kQParts) {
        const auto part = build_Qn(n);
        all.insert(all.end(), part.begin(), part.end());
    }
    return VectorSet(std::move(all), {"Q", Int{462}, std::nullopt});
}

namespace {

void check_S_args(Int N, Int H) {
    if (N < 1 || !is_squarefree(N))
        throw std::domain_error("enumerate_S: N must be squarefree and positive (pass radical(N))");
    if (H < 1) throw std::domain_error("enumerate_S: height bound must be >= 1");
}

// One slice of the cube at fixed x, in lexicographic (y, z) order.
void scan_slice(Int x, Int N, Int H, std::vector<PrimVec>& out) {
    for (Int y = -H; y <= H; ++y)
        for (Int z = -H; z <= H; ++z) {
            const Vec3 v{x, y, z};
            if (v.is_zero() || !q_in_S(norm_sq(v), N)) continue;
            if (auto p = PrimVec::from_canonical(v)) out.push_back(*p);
        }
}

VectorSet::Meta S_meta(Int N, Int H) {
    return {"S(" + std::to_string(N) + ")|H=" + std::to_string(H), N, H};
}

}  // namespace

VectorSet enumerate_S(Int N, Int H) {
    check_S_args(N, H);
    const Int width = 2 * H + 1;
    std::vector<std::vector<PrimVec>> slices(static_cast<std::size_t>(width));
#pragma omp parallel for schedule(dynamic)
    for (Int i = 0; i < width; ++i) scan_slice(i - H, N, H, slices[static_cast<std::size_t>(i)]);

    std::vector<PrimVec> all;
    for (auto& s : slices) all.insert(all.end(), s.begin(), s.end());
    return VectorSet(std::move(all), S_meta(N, H));
}

VectorSet enumerate_S_serial(Int N, Int H) {
    check_S_args(N, H);
    std::vector<PrimVec> all;
    for (Int x = -H; x <= H; ++x) scan_slice(x, N, H, all);
    return VectorSet(std::move(all), S_meta(N, H));
}

}  // namespace ks
