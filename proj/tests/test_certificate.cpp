#include <doctest.h>

#include <stdexcept>

#include "cert_mutations.hpp"
#include "kscolor/certificate.hpp"

using namespace ks;

namespace {

const OrthoGraph& q_graph() {
    static const OrthoGraph g = build_graph(build_Q());
    return g;
}

Certificate bundled() { return parse_certificate(bundled_certificate_text()); }

}  // namespace

TEST_CASE("bundled proof replays on Q") {
    const auto c = bundled();
    CHECK(c.steps.size() == 18);
    const auto v = verify_certificate(q_graph(), c);
    CHECK(v.valid);
    CHECK(v.step == 17);
    CHECK(v.reason.empty());
}

TEST_CASE("the proof does not transfer to a set missing its vectors") {
    // Dropping (2,2,-5) breaks the symmetry the first fix relies on.
    std::vector<PrimVec> keep;
    for (const auto& v : build_Q())
        if (v != canonicalize({2, 2, -5})) keep.push_back(v);
    const auto g = build_graph(VectorSet(keep));
    const auto v = verify_certificate(g, bundled());
    CHECK_FALSE(v.valid);
    CHECK(v.step == 0);
    CHECK(v.reason.find("does not preserve") != std::string::npos);
}

TEST_CASE("every single-step mutation is rejected at that step") {
    const auto ms = mutations::all(q_graph(), bundled());
    CHECK(ms.size() >= 18);
    for (const auto& m : ms) {
        CAPTURE(m.label);
        const auto v = verify_certificate(q_graph(), m.cert);
        CHECK_FALSE(v.valid);
        CHECK(v.step == m.step);
    }
}

TEST_CASE("replacing the closing edge of the first chain") {
    auto c = bundled();
    auto& p = std::get<cert::Propagate>(c.steps[11]);
    REQUIRE(p.context == std::vector<Vec3>{{2, 1, -1}, {-3, 8, 2}});
    p.context = {{2, 1, -1}, {4, 1, 2}};
    p.vertex = {4, 1, 2};
    const auto v = verify_certificate(q_graph(), c);
    CHECK_FALSE(v.valid);
    CHECK(v.step == 11);
    CHECK(v.reason == "cited pair is not orthogonal");
}

TEST_CASE("truncated and empty certificates") {
    auto c = bundled();
    c.steps.pop_back();
    auto v = verify_certificate(q_graph(), c);
    CHECK_FALSE(v.valid);
    CHECK(v.step == 17);
    CHECK(v.reason == "no contradiction reached");

    v = verify_certificate(q_graph(), Certificate{});
    CHECK_FALSE(v.valid);
    CHECK(v.reason == "no contradiction reached");

    c = bundled();
    c.steps.push_back(c.steps.back());
    v = verify_certificate(q_graph(), c);
    CHECK_FALSE(v.valid);
    CHECK(v.step == 18);
}

TEST_CASE("wlog checks") {
    auto c = bundled();
    auto& w = std::get<cert::WlogFix>(c.steps[0]);
    // dropping an alternative leaves the basis triple uncovered
    w.alternatives.pop_back();
    auto v = verify_certificate(q_graph(), c);
    CHECK_FALSE(v.valid);
    CHECK(v.step == 0);

    c = bundled();
    auto& w2 = std::get<cert::WlogFix>(c.steps[0]);
    w2.alternatives[0].witness = {0, 1, 0, 1, 1, 0, 0, 0, 1};
    v = verify_certificate(q_graph(), c);
    CHECK_FALSE(v.valid);
    CHECK(v.reason.find("signed permutation") != std::string::npos);

    // a witness that moves an already colored vertex: reuse swap-xy at step 5
    c = bundled();
    auto& w3 = std::get<cert::WlogFix>(c.steps[5]);
    w3.alternatives[0].witness = {0, 0, 1, 0, 1, 0, 1, 0, 0};
    v = verify_certificate(q_graph(), c);
    CHECK_FALSE(v.valid);
    CHECK(v.step == 5);

    // a witness that does not preserve the set
    const auto g = build_graph(set_union(build_Qn(1), VectorSet(std::vector<Vec3>{{1, 2, 0}})));
    Certificate d;
    d.steps.push_back(cert::WlogFix{
        {1, 0, 0}, 1, {{{0, 1, 0}, {0, 1, 0, 1, 0, 0, 0, 0, 1}}, {{0, 0, 1}, {0, 0, 1, 0, 1, 0, 1, 0, 0}}}});
    v = verify_certificate(g, d);
    CHECK_FALSE(v.valid);
    CHECK(v.reason.find("does not preserve") != std::string::npos);
}

TEST_CASE("contradiction by a violated context") {
    const auto g = build_graph(build_Qn(1));
    Certificate c = parse_certificate(
        "PROPAGATE context 1 0 0 0 1 0 vertex 0 1 0 color 1\n");
    CHECK_FALSE(verify_certificate(g, c).valid);  // the edge forces only 0

    c = parse_certificate(
        "WLOG_FIX vertex 1 0 0 color 1 alt 0 1 0 witness 0 1 0 1 0 0 0 0 1 alt 0 0 1 witness 0 0 1 0 1 0 1 0 0\n"
        "PROPAGATE context 1 0 0 0 1 0 0 0 1 vertex 0 1 0 color 0\n"
        "CONTRADICTION context 1 0 0 0 1 0 0 0 1\n");
    auto v = verify_certificate(g, c);
    CHECK_FALSE(v.valid);
    CHECK(v.reason == "triple is not violated");
}

TEST_CASE("parse and format round trip") {
    const auto c = bundled();
    const auto text = format_certificate(c);
    CHECK(parse_certificate(text) == c);
    CHECK(format_certificate(parse_certificate(text)) == text);
    CHECK(parse_certificate("# only a comment\n\n").steps.empty());
}

TEST_CASE("parse errors name the line") {
    auto msg = [](const std::string& text) {
        try {
            parse_certificate(text);
        } catch (const std::runtime_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(msg("\nFROB 1 2 3\n") == "certificate line 2: unknown step kind 'FROB'");
    CHECK(msg("PROPAGATE context 1 0 0 0 1 0 vertex 1 0 color 0\n").rfind("certificate line 1:", 0) == 0);
    CHECK(msg("CONTRADICTION vertex 1 0 0 extra\n") == "certificate line 1: trailing tokens");
    CHECK(msg("WLOG_FIX vertex 1 0 0 color x\n") == "certificate line 1: expected an integer");
}
