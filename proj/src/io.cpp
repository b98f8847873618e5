#include "kscolor/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ks {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::optional<Int> to_int(std::string_view s) {
    Int v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void read_meta(const std::string& comment, std::size_t lineno, VectorSet::Meta& meta) {
    const auto colon = comment.find(':');
    if (colon == std::string::npos) return;
    const auto key = trim(comment.substr(0, colon));
    const auto value = trim(comment.substr(colon + 1));
    if (key == "name") {
        meta.name = value;
    } else if (key == "N" || key == "H") {
        auto v = to_int(value);
        if (!v || *v < 1) parse_error(lineno, "bad " + key + " value '" + value + "'");
        (key == "N" ? meta.N : meta.H) = *v;
    }
}

void put(std::ostream& out, const Vec3& v) { out << v.x << ' ' << v.y << ' ' << v.z; }

}  // namespace

VectorSet read_vector_set(std::istream& in) {
    VectorSet::Meta meta;
    std::vector<Vec3> vs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            read_meta(t.substr(1), lineno, meta);
            continue;
        }
        std::istringstream ls(t);
        std::vector<Int> nums;
        for (std::string tok; ls >> tok;) {
            auto v = to_int(tok);
            if (!v) parse_error(lineno, "not an integer: '" + tok + "'");
            nums.push_back(*v);
        }
        if (nums.size() != 3) parse_error(lineno, "expected three integers");
        const Vec3 v{nums[0], nums[1], nums[2]};
        if (v.is_zero()) parse_error(lineno, "zero vector");
        vs.push_back(v);
    }
    return VectorSet(vs, std::move(meta));
}

void write_vector_set(std::ostream& out, const VectorSet& s) {
    if (!s.meta().name.empty()) out << "# name: " << s.meta().name << '\n';
    if (s.meta().N) out << "# N: " << *s.meta().N << '\n';
    if (s.meta().H) out << "# H: " << *s.meta().H << '\n';
    out << "# count: " << s.size() << '\n';
    for (const auto& v : s) {
        put(out, v.vec());
        out << '\n';
    }
}

VectorSet load_vector_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return read_vector_set(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void save_vector_set(const std::string& path, const VectorSet& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_vector_set(out, s);
}

void write_coloring(std::ostream& out, const VectorSet& s, const Coloring& c) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        put(out, s[i].vec());
        out << ' ' << int{c[i]} << '\n';
    }
}

void write_dimacs(std::ostream& out, const CnfFormula& f, const VectorSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << "c vertex " << i + 1 << " = ";
        put(out, s[i].vec());
        out << '\n';
    }
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (int lit : cl) out << lit << ' ';
        out << "0\n";
    }
}

void write_dot(std::ostream& out, const OrthoGraph& g) {
    auto label = [&](Vertex v) {
        const auto& w = g.vertices[v];
        return "\"" + std::to_string(w.x()) + "," + std::to_string(w.y()) + "," + std::to_string(w.z()) + "\"";
    };
    out << "graph orthogonality {\n";
    for (Vertex v = 0; v < g.size(); ++v) out << "  " << label(v) << ";\n";
    for (const auto& e : g.graph.edges) out << "  " << label(e[0]) << " -- " << label(e[1]) << ";\n";
    out << "}\n";
}

void write_projection_list(std::ostream& out, unsigned p, std::span<const FpMatrix> ms) {
    out << "p " << p << '\n';
    for (const auto& m : ms) {
        for (std::size_t i = 0; i < 9; ++i) out << (i ? " " : "") << m.e[i];
        out << '\n';
    }
}

void write_projection_coloring(std::ostream& out, std::span<const FpMatrix> ms, std::span<const std::int8_t> c) {
    for (std::size_t k = 0; k < ms.size(); ++k) {
        for (unsigned x : ms[k].e) out << x << ' ';
        out << int{c[k]} << '\n';
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ks
