#include <doctest.h>

#include "kscolor/ffproj.hpp"
#include "oracles.hpp"

using namespace ks;

namespace {

std::vector<FpProjection> rank_one(const ProjAlgebra& a) {
    std::vector<FpProjection> out;
    for (const auto& m : a.elements)
        if (m.rank() == 1) out.emplace_back(m);
    return out;
}

FpMatrix diag(unsigned p, Int a, Int b, Int c) {
    const std::array<Int, 9> e{a, 0, 0, 0, b, 0, 0, 0, c};
    return FpMatrix::from_ints(p, e);
}

}  // namespace

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(-7));
}

TEST_CASE("matrix arithmetic") {
    const std::array<Int, 9> raw{-1, 7, 12, 0, 5, -6, 3, 3, 3};
    const auto m = FpMatrix::from_ints(5, raw);
    CHECK(m.e == std::array<unsigned, 9>{4, 2, 2, 0, 0, 4, 3, 3, 3});
    CHECK(m * FpMatrix::identity(5) == m);
    CHECK(m + FpMatrix::zero(5) == m);
    CHECK(m - m == FpMatrix::zero(5));
    CHECK(m.transpose().transpose() == m);
    CHECK(FpMatrix::scalar(7, 3).rank() == 3);
    CHECK(FpMatrix::zero(7).rank() == 0);
    CHECK(diag(3, 1, 1, 0).rank() == 2);
    CHECK_THROWS_AS(FpProjection{m}, std::domain_error);
}

TEST_CASE("p = 2 projections") {
    const auto a = enumerate_projections(2);
    CHECK(a.elements.size() == 10);
    CHECK(a.elements.size() == oracle::symmetric_idempotents(2));
    CHECK(a.index_of(FpMatrix::zero(2)) == a.zero);
    CHECK(a.index_of(FpMatrix::identity(2)) == a.identity);
    CHECK(a.index_of(diag(2, 1, 0, 0)));
    CHECK(a.count_rank(1) == 4);
    CHECK(a.count_rank(2) == 4);
}

TEST_CASE("projection counts against the oracles") {
    for (unsigned p : {3u, 5u}) {
        CAPTURE(p);
        const auto a = enumerate_projections(p);
        CHECK(a.elements.size() == oracle::symmetric_idempotents(p));
        CHECK(a.count_rank(1) == oracle::nonisotropic_lines(p));
    }
    CHECK(enumerate_projections(3).elements.size() == 20);
    CHECK(enumerate_projections(5).elements.size() == 52);
    const auto a7 = enumerate_projections(7);
    CHECK(a7.elements.size() == 100);
    CHECK(a7.count_rank(1) == oracle::nonisotropic_lines(7));
    CHECK(a7.count_rank(1) == 49);
}

TEST_CASE("algebra structure") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        CAPTURE(p);
        const auto a = enumerate_projections(p);
        CHECK(std::is_sorted(a.elements.begin(), a.elements.end()));
        for (std::size_t i = 0; i < a.elements.size(); ++i) {
            const auto& e = a.elements[i];
            CHECK(e.is_symmetric());
            CHECK(e.is_idempotent());
            CHECK(a.elements[a.complement[i]] == FpMatrix::identity(p) - e);
            CHECK(a.complement[a.complement[i]] == i);
            CHECK(e.rank() + a.elements[a.complement[i]].rank() == 3);
        }
        for (const auto& [i, j] : a.commuting) {
            CHECK(i < j);
            const auto& e = a.elements[i];
            const auto& f = a.elements[j];
            CHECK(e * f == f * e);
            CHECK(a.index_of(e * f));
            CHECK(a.index_of(e + f - e * f));
        }
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(enumerate_projections(4), std::domain_error);
    CHECK_THROWS_AS(enumerate_projections(103), std::domain_error);
    CHECK_THROWS_AS(enumerate_projections(1), std::domain_error);
    CHECK_THROWS_AS(enumerate_projections_serial(9), std::domain_error);
}

TEST_CASE("project_mod_p") {
    const auto e = project_mod_p(canonicalize({-3, 8, 2}), 5);
    CHECK(e.matrix().e == std::array<unsigned, 9>{2, 3, 2, 3, 2, 3, 2, 3, 2});
    CHECK(e.rank() == 1);
    CHECK_THROWS_AS(project_mod_p(canonicalize({1, 1, 0}), 2), std::domain_error);
    CHECK_THROWS_AS(reduce_set_mod_p(build_Q(), 7), std::domain_error);

    const auto r = reduce_set_mod_p(build_Qn(1), 7);
    REQUIRE(r.projections.size() == 3);
    CHECK_FALSE(r.collided);
    for (const auto& m : {diag(7, 1, 0, 0), diag(7, 0, 1, 0), diag(7, 0, 0, 1)})
        CHECK(std::find(r.projections.begin(), r.projections.end(), FpProjection(m)) != r.projections.end());
}

TEST_CASE("orthogonal vectors give orthogonal projections") {
    const auto q = build_Q();
    for (const auto& u : q)
        for (const auto& v : q) {
            if (!is_orthogonal(u.vec(), v.vec())) continue;
            const auto a = project_mod_p(u, 5).matrix();
            const auto b = project_mod_p(v, 5).matrix();
            CHECK(a * b == FpMatrix::zero(5));
            CHECK(b * a == FpMatrix::zero(5));
        }
}

TEST_CASE("Q mod 5") {
    const auto r = reduce_set_mod_p(build_Q(), 5);
    CHECK(r.projections.size() == 25);
    CHECK(r.collided);
    const auto s = restricted_ks_search(r.projections);
    CHECK_FALSE(s.result.sat);
    const auto st = graph_stats(s.graph);
    CHECK(st.edges == 60);
    CHECK(st.triples == 20);
}

TEST_CASE("restricted search edge cases") {
    CHECK(restricted_ks_search({}).result.sat);
    const std::vector<FpProjection> mixed{FpProjection(diag(5, 1, 0, 0)), FpProjection(diag(7, 1, 0, 0))};
    CHECK_THROWS_AS(restricted_ks_search(mixed), std::domain_error);
    const std::vector<FpProjection> rank2{FpProjection(diag(5, 1, 1, 0))};
    CHECK_THROWS_AS(restricted_ks_search(rank2), std::domain_error);
    const std::vector<FpProjection> basis{FpProjection(diag(3, 1, 0, 0)), FpProjection(diag(3, 0, 1, 0)),
                                          FpProjection(diag(3, 0, 0, 1))};
    const auto s = restricted_ks_search(basis);
    CHECK(s.result.sat);
    CHECK(graph_stats(s.graph) == GraphStats{3, 3, 1, 0});
}

TEST_CASE("two-valued homomorphisms") {
    const std::map<unsigned, bool> want{{2, true}, {3, true}, {5, false}, {7, false}};
    for (const auto& [p, sat] : want) {
        CAPTURE(p);
        const auto a = enumerate_projections(p);
        const auto r = search_ba_coloring(a);
        CHECK(r.sat == sat);
        if (r.sat) {
            CHECK(verify_ba_coloring(a, r.coloring));
            auto bad = r.coloring;
            bad[a.zero] = 1;
            CHECK_FALSE(verify_ba_coloring(a, bad));
        }
        // the rank-1 frames decide it too
        CHECK(restricted_ks_search(rank_one(a)).result.sat == sat);
    }
}

TEST_CASE("bezout") { CHECK(bezout_check()); }
