#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "kscolor/io.hpp"

using namespace ks;

namespace {

std::string written(const VectorSet& s) {
    std::ostringstream os;
    write_vector_set(os, s);
    return os.str();
}

VectorSet read(const std::string& text) {
    std::istringstream is(text);
    return read_vector_set(is);
}

std::string error_of(const std::string& text) {
    try {
        read(text);
    } catch (const std::runtime_error& e) {
        return e.what();
    }
    return "no error";
}

}  // namespace

TEST_CASE("vector set round trip is byte exact") {
    for (const auto& s : {build_Q(), build_Qn(77), enumerate_S(35, 5), VectorSet{}}) {
        const auto text = written(s);
        const auto back = read(text);
        CHECK(back == s);
        CHECK(written(back) == text);
    }
}

TEST_CASE("header and body") {
    const auto text = written(build_Qn(1));
    CHECK(text.find("# count: 3\n") != std::string::npos);
    CHECK(text.find("1 0 0\n") != std::string::npos);
    const auto q = read(written(build_Q()));
    CHECK(q.meta().name == "Q");
    CHECK(q.meta().N == 462);
    const auto s = read(written(enumerate_S(6, 3)));
    CHECK(s.meta().N == 6);
    CHECK(s.meta().H == 3);
}

TEST_CASE("reading canonicalizes and merges") {
    const auto s = read("# hand written\n2 0 0\n-1 0 0\n  0 -3 3 \n0 1 -1\n\n-1 1 -1\n");
    CHECK(s.size() == 3);
    CHECK(s.contains(Vec3{1, 0, 0}));
    CHECK(s.contains(Vec3{0, 1, -1}));
    CHECK(s.contains(Vec3{1, -1, 1}));
}

TEST_CASE("malformed input names the line") {
    CHECK(error_of("1 0 0\n1 2\n") == "line 2: expected three integers");
    CHECK(error_of("1 0 0\n\n0 0 0\n") == "line 3: zero vector");
    CHECK(error_of("1 x 0\n") == "line 1: not an integer: 'x'");
    CHECK(error_of("# N: -4\n") == "line 1: bad N value '-4'");
    CHECK(error_of("1 0 0 0\n") == "line 1: expected three integers");
}

TEST_CASE("file helpers") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "kscolor_io_test.vs").string();
    save_vector_set(path, build_Qn(21));
    CHECK(load_vector_set(path) == build_Qn(21));
    CHECK(read_text_file(path) == written(build_Qn(21)));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_vector_set(path), std::runtime_error);
}

TEST_CASE("coloring, DIMACS and DOT") {
    const auto g = build_graph(build_Qn(1));
    std::ostringstream c;
    write_coloring(c, g.vertices, Coloring{0, 0, 1});
    CHECK(c.str() == "0 0 1 0\n0 1 0 0\n1 0 0 1\n");

    std::ostringstream d;
    write_dimacs(d, export_cnf(g.graph), g.vertices);
    CHECK(d.str() ==
          "c vertex 1 = 0 0 1\nc vertex 2 = 0 1 0\nc vertex 3 = 1 0 0\np cnf 3 4\n"
          "1 2 3 0\n-1 -2 0\n-1 -3 0\n-2 -3 0\n");

    std::ostringstream dot;
    write_dot(dot, g);
    CHECK(dot.str().rfind("graph orthogonality {\n", 0) == 0);
    CHECK(dot.str().find("\"0,0,1\" -- \"0,1,0\";") != std::string::npos);

    std::ostringstream pl;
    const std::vector<FpMatrix> ms{FpMatrix::identity(5)};
    write_projection_list(pl, 5, ms);
    CHECK(pl.str() == "p 5\n1 0 0 0 1 0 0 0 1\n");
    std::ostringstream pc;
    const std::vector<std::int8_t> col{1};
    write_projection_coloring(pc, ms, col);
    CHECK(pc.str() == "1 0 0 0 1 0 0 0 1 1\n");
}
