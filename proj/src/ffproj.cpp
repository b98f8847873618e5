#include "kscolor/ffproj.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ks {

namespace {

unsigned mod(Int a, unsigned p) {
    const Int m = a % static_cast<Int>(p);
    return static_cast<unsigned>(m < 0 ? m + static_cast<Int>(p) : m);
}

unsigned inverse_mod(unsigned a, unsigned p) {
    Int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const Int q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod(t, p);
}

void check_prime(unsigned p) {
    if (!is_prime(p)) throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
    if (p > kMaxPrime)
        throw std::domain_error("prime " + std::to_string(p) + " exceeds the enumeration guard " +
                                std::to_string(kMaxPrime));
}

void same_prime(const FpMatrix& a, const FpMatrix& b) {
    if (a.p != b.p) throw std::domain_error("matrices over different primes");
}

std::string show(const Vec3& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + "," + std::to_string(v.z) + ")";
}

}  // namespace

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FpMatrix FpMatrix::zero(unsigned p) { return {p, {}}; }

FpMatrix FpMatrix::identity(unsigned p) { return scalar(p, 1); }

FpMatrix FpMatrix::scalar(unsigned p, Int s) {
    FpMatrix m{p, {}};
    m.e[0] = m.e[4] = m.e[8] = mod(s, p);
    return m;
}

FpMatrix FpMatrix::from_ints(unsigned p, std::span<const Int> entries) {
    if (entries.size() != 9) throw std::invalid_argument("FpMatrix: need nine entries");
    FpMatrix m{p, {}};
    for (std::size_t i = 0; i < 9; ++i) m.e[i] = mod(entries[i], p);
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    same_prime(*this, o);
    FpMatrix r{p, {}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::uint64_t s = 0;
            for (int k = 0; k < 3; ++k) s += std::uint64_t{(*this)(i, k)} * o(k, j);
            r.e[static_cast<std::size_t>(i * 3 + j)] = static_cast<unsigned>(s % p);
        }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    same_prime(*this, o);
    FpMatrix r{p, {}};
    for (std::size_t i = 0; i < 9; ++i) r.e[i] = (e[i] + o.e[i]) % p;
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    same_prime(*this, o);
    FpMatrix r{p, {}};
    for (std::size_t i = 0; i < 9; ++i) r.e[i] = (e[i] + p - o.e[i]) % p;
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r{p, {}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.e[static_cast<std::size_t>(j * 3 + i)] = (*this)(i, j);
    return r;
}

unsigned FpMatrix::rank() const {
    std::array<std::array<Int, 3>, 3> a{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = (*this)(i, j);
    unsigned rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int pivot = -1;
        for (int r = static_cast<int>(rank); r < 3; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const Int inv = inverse_mod(static_cast<unsigned>(a[rank][col]), p);
        for (int r = 0; r < 3; ++r) {
            if (r == static_cast<int>(rank) || a[r][col] == 0) continue;
            const Int f = a[r][col] * inv % p;
            for (int c = 0; c < 3; ++c) a[r][c] = mod(a[r][c] - f * a[rank][c], p);
        }
        ++rank;
    }
    return rank;
}

FpProjection::FpProjection(const FpMatrix& m) : m_(m) {
    if (!m.is_symmetric()) throw std::domain_error("projection must be symmetric");
    if (!m.is_idempotent()) throw std::domain_error("projection must be idempotent");
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> ProjAlgebra::index_of(const FpMatrix& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
}

std::size_t ProjAlgebra::count_rank(unsigned r) const {
    return static_cast<std::size_t>(
        std::count_if(elements.begin(), elements.end(), [r](const FpMatrix& m) { return m.rank() == r; }));
}

namespace {

// Symmetric matrices with a00 = lead / p, a01 = lead % p.
void scan_block(unsigned p, unsigned lead, std::vector<FpMatrix>& out) {
    const unsigned a00 = lead / p;
    const unsigned a01 = lead % p;
    for (unsigned a02 = 0; a02 < p; ++a02)
        for (unsigned a11 = 0; a11 < p; ++a11)
            for (unsigned a12 = 0; a12 < p; ++a12)
                for (unsigned a22 = 0; a22 < p; ++a22) {
                    const FpMatrix m{p, {a00, a01, a02, a01, a11, a12, a02, a12, a22}};
                    if (m.is_idempotent()) out.push_back(m);
                }
}

ProjAlgebra assemble_algebra(unsigned p, std::vector<FpMatrix> elems) {
    ProjAlgebra a;
    a.p = p;
    a.elements = std::move(elems);
    std::sort(a.elements.begin(), a.elements.end());
    a.zero = *a.index_of(FpMatrix::zero(p));
    a.identity = *a.index_of(FpMatrix::identity(p));
    const auto id = FpMatrix::identity(p);
    for (const auto& e : a.elements) a.complement.push_back(*a.index_of(id - e));
    const auto n = static_cast<std::uint32_t>(a.elements.size());
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (a.elements[i] * a.elements[j] == a.elements[j] * a.elements[i]) a.commuting.push_back({i, j});
    return a;
}

}  // namespace

ProjAlgebra enumerate_projections(unsigned p) {
    check_prime(p);
    const long blocks = static_cast<long>(p) * p;
    std::vector<std::vector<FpMatrix>> found(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < blocks; ++b) scan_block(p, static_cast<unsigned>(b), found[static_cast<std::size_t>(b)]);
    std::vector<FpMatrix> all;
    for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
    return assemble_algebra(p, std::move(all));
}

ProjAlgebra enumerate_projections_serial(unsigned p) {
    check_prime(p);
    std::vector<FpMatrix> all;
    for (unsigned b = 0; b < p * p; ++b) scan_block(p, b, all);
    return assemble_algebra(p, std::move(all));
}

// ---------------------------------------------------------------------------
// Boolean propagation over the homomorphism constraints.

namespace {

enum class Op : std::uint8_t { And, Or, Not };

struct Gate {
    Op op;
    std::uint32_t out, a, b;  // b unused for Not
};

class GateSolver {
public:
    GateSolver(std::size_t n, std::vector<Gate> gates) : gates_(std::move(gates)), watch_(n), val_(n, -1) {
        for (std::uint32_t i = 0; i < gates_.size(); ++i) {
            const auto& g = gates_[i];
            watch_[g.out].push_back(i);
            watch_[g.a].push_back(i);
            if (g.op != Op::Not && g.b != g.a) watch_[g.b].push_back(i);
        }
    }

    bool decide(std::uint32_t v, std::int8_t c) { return set(v, c) && propagate(); }
    std::size_t mark() const { return trail_.size(); }
    void undo(std::size_t m) {
        while (trail_.size() > m) {
            val_[trail_.back()] = -1;
            trail_.pop_back();
        }
        head_ = std::min(head_, m);
    }

    // Unassigned variable with the most gates; kNone when all assigned.
    std::uint32_t pick() const {
        std::uint32_t best = kNone;
        for (std::uint32_t v = 0; v < val_.size(); ++v)
            if (val_[v] < 0 && (best == kNone || watch_[v].size() > watch_[best].size())) best = v;
        return best;
    }

    const std::vector<std::int8_t>& values() const { return val_; }

    static constexpr std::uint32_t kNone = 0xffffffffu;
    std::uint64_t propagations = 0;

private:
    bool set(std::uint32_t v, std::int8_t c) {
        if (val_[v] == c) return true;
        if (val_[v] >= 0) return false;
        val_[v] = c;
        trail_.push_back(v);
        return true;
    }

    bool imply(std::uint32_t v, std::int8_t c) {
        if (val_[v] < 0) ++propagations;
        return set(v, c);
    }

    // z = a AND b, or with every value negated z = a OR b.
    bool meet(std::uint32_t z, std::uint32_t a, std::uint32_t b, std::int8_t absorbing) {
        const std::int8_t other = static_cast<std::int8_t>(1 - absorbing);
        const auto va = val_[a], vb = val_[b], vz = val_[z];
        if (va == absorbing || vb == absorbing) return imply(z, absorbing);
        if (va == other && vb == other) return imply(z, other);
        if (vz == other) return imply(a, other) && imply(b, other);
        if (vz == absorbing) {
            if (va == other) return imply(b, absorbing);
            if (vb == other) return imply(a, absorbing);
        }
        return true;
    }

    bool fire(const Gate& g) {
        switch (g.op) {
            case Op::And:
                return meet(g.out, g.a, g.b, 0);
            case Op::Or:
                return meet(g.out, g.a, g.b, 1);
            case Op::Not:
                if (val_[g.a] >= 0 && !imply(g.out, static_cast<std::int8_t>(1 - val_[g.a]))) return false;
                if (val_[g.out] >= 0 && !imply(g.a, static_cast<std::int8_t>(1 - val_[g.out]))) return false;
                return true;
        }
        return true;
    }

    bool propagate() {
        while (head_ < trail_.size()) {
            const auto v = trail_[head_++];
            for (auto gi : watch_[v])
                if (!fire(gates_[gi])) return false;
        }
        return true;
    }

    std::vector<Gate> gates_;
    std::vector<std::vector<std::uint32_t>> watch_;
    std::vector<std::int8_t> val_;
    std::vector<std::uint32_t> trail_;
    std::size_t head_ = 0;
};

std::vector<Gate> homomorphism_gates(const ProjAlgebra& a) {
    std::vector<Gate> gates;
    for (std::uint32_t i = 0; i < a.elements.size(); ++i)
        if (i < a.complement[i]) gates.push_back({Op::Not, static_cast<std::uint32_t>(a.complement[i]), i, i});
    for (const auto& [i, j] : a.commuting) {
        const auto& e = a.elements[i];
        const auto& f = a.elements[j];
        const auto ef = e * f;
        const auto m = static_cast<std::uint32_t>(*a.index_of(ef));
        const auto jn = static_cast<std::uint32_t>(*a.index_of(e + f - ef));
        gates.push_back({Op::And, m, i, j});
        gates.push_back({Op::Or, jn, i, j});
    }
    return gates;
}

bool gate_search(GateSolver& s, SolveStats& st, std::size_t depth) {
    st.max_depth = std::max(st.max_depth, depth);
    const auto v = s.pick();
    if (v == GateSolver::kNone) return true;
    for (std::int8_t c : {std::int8_t{1}, std::int8_t{0}}) {
        const auto m = s.mark();
        ++st.nodes;
        if (s.decide(v, c) && gate_search(s, st, depth + 1)) return true;
        s.undo(m);
    }
    return false;
}

}  // namespace

BaSearchResult search_ba_coloring(const ProjAlgebra& a) {
    BaSearchResult r;
    GateSolver s(a.elements.size(), homomorphism_gates(a));
    const bool ok = s.decide(static_cast<std::uint32_t>(a.zero), 0) &&
                    s.decide(static_cast<std::uint32_t>(a.identity), 1) && gate_search(s, r.stats, 0);
    r.stats.propagations = s.propagations;
    r.sat = ok;
    if (ok) r.coloring = s.values();
    return r;
}

bool verify_ba_coloring(const ProjAlgebra& a, std::span<const std::int8_t> c) {
    if (c.size() != a.elements.size()) return false;
    for (auto x : c)
        if (x != 0 && x != 1) return false;
    if (c[a.zero] != 0 || c[a.identity] != 1) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[a.complement[i]] != 1 - c[i]) return false;
    for (const auto& [i, j] : a.commuting) {
        const auto ef = a.elements[i] * a.elements[j];
        const auto meet = *a.index_of(ef);
        const auto join = *a.index_of(a.elements[i] + a.elements[j] - ef);
        if (c[meet] != (c[i] & c[j])) return false;
        if (c[join] != (c[i] | c[j])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

FpProjection project_mod_p(const PrimVec& v, unsigned p) {
    check_prime(p);
    const unsigned q = mod(v.q(), p);
    if (q == 0)
        throw std::domain_error("vector " + show(v.vec()) + " has q = " + std::to_string(v.q()) +
                                " divisible by " + std::to_string(p));
    const Int inv = inverse_mod(q, p);
    const std::array<Int, 3> w{mod(v.x(), p), mod(v.y(), p), mod(v.z(), p)};
    std::array<Int, 9> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i * 3 + j)] = w[i] * w[j] % p * inv;
    return FpProjection(FpMatrix::from_ints(p, m));
}

Reduction reduce_set_mod_p(const VectorSet& s, unsigned p) {
    Reduction r;
    r.p = p;
    for (const auto& v : s) r.projections.push_back(project_mod_p(v, p));
    std::sort(r.projections.begin(), r.projections.end());
    const auto before = r.projections.size();
    r.projections.erase(std::unique(r.projections.begin(), r.projections.end()), r.projections.end());
    r.collided = r.projections.size() != before;
    return r;
}

ProjectionSearch restricted_ks_search(std::span<const FpProjection> projs) {
    ProjectionSearch out;
    out.graph.vertex_count = projs.size();
    if (projs.empty()) {
        out.result = solve(out.graph);
        return out;
    }
    const unsigned p = projs.front().p();
    for (const auto& e : projs) {
        if (e.p() != p) throw std::domain_error("restricted_ks_search: projections over different primes");
        if (e.rank() != 1) throw std::domain_error("restricted_ks_search: projection is not rank 1");
    }
    const auto n = static_cast<Vertex>(projs.size());
    const auto zero = FpMatrix::zero(p);
    const auto id = FpMatrix::identity(p);
    std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (projs[i].matrix() * projs[j].matrix() == zero) {
                orth[i][j] = orth[j][i] = true;
                out.graph.edges.push_back({i, j});
            }
    for (const auto& [i, j] : out.graph.edges)
        for (Vertex k = j + 1; k < n; ++k)
            if (orth[i][k] && orth[j][k] && projs[i].matrix() + projs[j].matrix() + projs[k].matrix() == id)
                out.graph.triples.push_back({i, j, k});
    out.graph.normalize();
    out.result = solve(out.graph);
    return out;
}

bool bezout_check() {
    if (31 * 5 - 2 * 77 != 1) return false;
    for (unsigned p = 2; p <= kMaxPrime; ++p) {
        if (!is_prime(p) || p == 2 || p == 3 || p == 7 || p == 11) continue;
        const auto lhs = FpMatrix::scalar(p, 31) * FpMatrix::scalar(p, 5) -
                         FpMatrix::scalar(p, 2) * FpMatrix::scalar(p, 77);
        if (lhs != FpMatrix::identity(p)) return false;
    }
    return true;
}

}  // namespace ks
