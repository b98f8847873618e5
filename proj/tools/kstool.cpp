// kstool: build vector sets, solve Kochen-Specker colorability, replay
// certificates and run the finite-field projection search.
//
// Exit codes: 0 success, 1 bad input or domain error (also an Invalid
// certificate), 2 when --require-sat was given and the answer is UNSAT.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kscolor/certificate.hpp"
#include "kscolor/ffproj.hpp"
#include "kscolor/io.hpp"
#include "kscolor/kssolver.hpp"
#include "kscolor/orthograph.hpp"
#include "kscolor/vecset.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUnsatWhenSatRequired = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

ks::VectorSet build_named(const std::string& name, std::optional<ks::Int> N, ks::Int height) {
    if (name == "Q") return ks::build_Q();
    if (name == "S") {
        if (!N) throw UsageError("build S needs --N");
        return ks::enumerate_S(*N, height);
    }
    std::string digits = name.substr(name.rfind('Q') == 0 ? 1 : name.size());
    if (!digits.empty() && digits.front() == '_') digits.erase(0, 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("unknown set '" + name + "' (use Q, Q1, Q2, Q3, Q6, Q21, Q33, Q77 or S)");
    return ks::build_Qn(std::stoll(digits));
}

void print_stats(const ks::SolveStats& st) {
    std::cout << "nodes " << st.nodes << "\npropagations " << st.propagations << "\nmax_depth " << st.max_depth
              << '\n';
    if (st.wlog_fixes) std::cout << "wlog_fixes " << st.wlog_fixes << '\n';
}

void print_graph_stats(const ks::GraphStats& s) {
    std::cout << "vertices " << s.vertices << "\nedges " << s.edges << "\ntriples " << s.triples
              << "\nbare_edges " << s.bare_edges << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kochen-Specker colorability of integer vector sets"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Write a named vector set (Q, Q1..Q77) or a slice of S(N)");
    std::string build_name;
    std::optional<ks::Int> build_N;
    ks::Int build_height = 8;
    std::string build_out;
    build->add_option("name", build_name, "Q, Q1, Q2, Q3, Q6, Q21, Q33, Q77 or S")->required();
    build->add_option("--N", build_N, "squarefree N for S");
    build->add_option("--height", build_height, "max absolute entry for S")->capture_default_str();
    build->add_option("-o,--out", build_out, "output file (default stdout)");

    // graph
    auto* graph = app.add_subcommand("graph", "Orthogonality graph statistics and DOT export");
    std::string graph_in, graph_dot;
    graph->add_option("input", graph_in, "vector-set file")->required();
    graph->add_option("--dot-out", graph_dot, "write the graph in DOT format");

    // solve
    auto* solve = app.add_subcommand("solve", "Decide Kochen-Specker colorability");
    std::string solve_in, cnf_out, dot_out, coloring_out;
    bool brute = false, wlog = false, parallel = false, require_sat = false;
    solve->add_option("input", solve_in, "vector-set file")->required();
    solve->add_flag("--brute", brute, "exhaustive oracle (at most 25 vectors)");
    solve->add_flag("--wlog", wlog, "symmetry breaking for signed-permutation-invariant sets");
    solve->add_flag("--parallel", parallel, "split the search over OpenMP threads");
    solve->add_option("--cnf-out", cnf_out, "write DIMACS CNF");
    solve->add_option("--dot-out", dot_out, "write the graph in DOT format");
    solve->add_option("--coloring-out", coloring_out, "coloring file on SAT (default <input>.coloring)");
    solve->add_flag("--require-sat", require_sat, "exit 2 if UNSAT");

    // certify
    auto* certify = app.add_subcommand("certify", "Replay an uncolorability certificate");
    std::string cert_set, cert_file;
    certify->add_option("input", cert_set, "vector-set file")->required();
    certify->add_option("certificate", cert_file, "certificate file (default: bundled proof for Q)");

    // ffproj
    auto* ffproj = app.add_subcommand("ffproj", "Projections of M_3(F_p) and their colorings");
    unsigned ff_p = 0;
    std::string ff_reduce, ff_list_out, ff_coloring_out;
    bool ff_require_sat = false;
    ffproj->add_option("--p", ff_p, "prime modulus")->required();
    ffproj->add_option("--reduce", ff_reduce, "reduce this vector set mod p and search its image");
    ffproj->add_option("--list-out", ff_list_out, "write the projection list");
    ffproj->add_option("--coloring-out", ff_coloring_out, "write the coloring on SAT");
    ffproj->add_flag("--require-sat", ff_require_sat, "exit 2 if UNSAT");

    // stats
    auto* stats = app.add_subcommand("stats", "Summary of a vector set");
    std::string stats_in;
    stats->add_option("input", stats_in, "vector-set file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kDomainError;
    }

    try {
        if (*build) {
            if (build_name == "S" && !build->count("--height"))
                std::cerr << "height bound defaulted to " << build_height << '\n';
            const auto s = build_named(build_name, build_N, build_height);
            if (build_out.empty()) {
                ks::write_vector_set(std::cout, s);
                std::cerr << s.size() << " vectors\n";
            } else {
                ks::save_vector_set(build_out, s);
                std::cout << s.size() << " vectors\n";
            }
            return kOk;
        }

        if (*graph) {
            const auto g = ks::build_graph(ks::load_vector_set(graph_in));
            print_graph_stats(ks::graph_stats(g.graph));
            if (!graph_dot.empty()) {
                auto out = open_out(graph_dot);
                ks::write_dot(out, g);
            }
            return kOk;
        }

        if (*solve) {
            const auto g = ks::build_graph(ks::load_vector_set(solve_in));
            if (!cnf_out.empty()) {
                auto out = open_out(cnf_out);
                ks::write_dimacs(out, ks::export_cnf(g.graph), g.vertices);
            }
            if (!dot_out.empty()) {
                auto out = open_out(dot_out);
                ks::write_dot(out, g);
            }
            const auto t0 = std::chrono::steady_clock::now();
            ks::SolveOptions opts;
            opts.wlog = wlog;
            ks::SolveResult r;
            if (brute)
                r = ks::solve_bruteforce(g.graph);
            else
                r = parallel ? ks::solve_parallel(g, opts) : ks::solve(g, opts);
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

            std::cout << (r.sat ? "SAT" : "UNSAT") << '\n';
            std::cout << "vertices " << g.size() << '\n';
            print_stats(r.stats);
            std::cout << "seconds " << dt.count() << '\n';
            if (r.sat) {
                const auto path = coloring_out.empty() ? solve_in + ".coloring" : coloring_out;
                auto out = open_out(path);
                ks::write_coloring(out, g.vertices, r.coloring);
                std::cout << "coloring " << path << '\n';
            }
            return (!r.sat && require_sat) ? kUnsatWhenSatRequired : kOk;
        }

        if (*certify) {
            const auto g = ks::build_graph(ks::load_vector_set(cert_set));
            const auto text = cert_file.empty() ? ks::bundled_certificate_text() : ks::read_text_file(cert_file);
            const auto verdict = ks::verify_certificate(g, ks::parse_certificate(text));
            if (verdict.valid) {
                std::cout << "Valid\n";
                return kOk;
            }
            std::cout << "Invalid at step " << verdict.step << ": " << verdict.reason << '\n';
            return kDomainError;
        }

        if (*ffproj) {
            if (!ff_reduce.empty()) {
                const auto s = ks::load_vector_set(ff_reduce);
                const auto red = ks::reduce_set_mod_p(s, ff_p);
                const auto search = ks::restricted_ks_search(red.projections);
                const auto gs = ks::graph_stats(search.graph);
                std::cout << (search.result.sat ? "SAT" : "UNSAT") << '\n';
                std::cout << "vectors " << s.size() << "\nprojections " << red.projections.size()
                          << "\ncollisions " << (red.collided ? "yes" : "no") << "\nedges " << gs.edges
                          << "\ntriples " << gs.triples << '\n';
                print_stats(search.result.stats);
                std::vector<ks::FpMatrix> ms;
                for (const auto& e : red.projections) ms.push_back(e.matrix());
                if (!ff_list_out.empty()) {
                    auto out = open_out(ff_list_out);
                    ks::write_projection_list(out, ff_p, ms);
                }
                if (search.result.sat && !ff_coloring_out.empty()) {
                    auto out = open_out(ff_coloring_out);
                    ks::write_projection_coloring(out, ms, search.result.coloring);
                }
                return (!search.result.sat && ff_require_sat) ? kUnsatWhenSatRequired : kOk;
            }
            const auto alg = ks::enumerate_projections(ff_p);
            const auto r = ks::search_ba_coloring(alg);
            std::cout << (r.sat ? "SAT" : "UNSAT") << '\n';
            std::cout << "projections " << alg.elements.size() << "\nrank1 " << alg.count_rank(1) << "\nrank2 "
                      << alg.count_rank(2) << "\ncommuting_pairs " << alg.commuting.size() << '\n';
            print_stats(r.stats);
            if (!ff_list_out.empty()) {
                auto out = open_out(ff_list_out);
                ks::write_projection_list(out, ff_p, alg.elements);
            }
            if (r.sat && !ff_coloring_out.empty()) {
                auto out = open_out(ff_coloring_out);
                ks::write_projection_coloring(out, alg.elements, r.coloring);
            }
            return (!r.sat && ff_require_sat) ? kUnsatWhenSatRequired : kOk;
        }

        if (*stats) {
            const auto s = ks::load_vector_set(stats_in);
            std::map<ks::Int, std::size_t> by_q;
            ks::Int lcm = 1;
            for (const auto& v : s) {
                ++by_q[v.q()];
                lcm = std::lcm(lcm, v.q());
            }
            std::cout << "name " << (s.meta().name.empty() ? "-" : s.meta().name) << '\n';
            std::cout << "count " << s.size() << '\n';
            for (const auto& [q, n] : by_q) std::cout << "q " << q << ' ' << n << '\n';
            std::cout << "radical " << (s.empty() ? 1 : ks::radical(lcm)) << '\n';
            std::cout << "symmetries " << ks::automorphisms(s).size() << '\n';
            print_graph_stats(ks::graph_stats(ks::build_graph(s).graph));
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}
