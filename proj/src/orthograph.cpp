#include "kscolor/orthograph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ks {

namespace {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Triple make_triple(Vertex a, Vertex b, Vertex c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

template <class T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Rows i of the orthogonality structure: neighbours j > i, and triples with
// smallest index i.
struct Row {
    std::vector<Edge> edges;
    std::vector<Triple> triples;
};

void adjacency_row(const VectorSet& s, Vertex i, std::vector<Vertex>& out) {
    for (auto j = static_cast<Vertex>(i + 1); j < s.size(); ++j)
        if (dot(s[i].vec(), s[j].vec()) == 0) out.push_back(j);
}

void fill_row(const VectorSet& s, const std::vector<std::vector<Vertex>>& up, Vertex i, Row& row) {
    const auto& ni = up[i];
    for (std::size_t a = 0; a < ni.size(); ++a) {
        row.edges.push_back({i, ni[a]});
        for (std::size_t b = a + 1; b < ni.size(); ++b)
            if (dot(s[ni[a]].vec(), s[ni[b]].vec()) == 0) row.triples.push_back({i, ni[a], ni[b]});
    }
}

OrthoGraph assemble(const VectorSet& s, std::vector<Row>& rows) {
    OrthoGraph g{s, {}};
    g.graph.vertex_count = s.size();
    for (auto& r : rows) {
        g.graph.edges.insert(g.graph.edges.end(), r.edges.begin(), r.edges.end());
        g.graph.triples.insert(g.graph.triples.end(), r.triples.begin(), r.triples.end());
    }
    return g;
}

}  // namespace

void ContextGraph::normalize() {
    auto check = [&](Vertex v) {
        if (v >= vertex_count) throw std::invalid_argument("ContextGraph: vertex index out of range");
    };
    for (auto& e : edges) {
        check(e[0]);
        check(e[1]);
        if (e[0] == e[1]) throw std::invalid_argument("ContextGraph: self-loop");
        e = make_edge(e[0], e[1]);
    }
    for (auto& t : triples) {
        for (Vertex v : t) check(v);
        t = make_triple(t[0], t[1], t[2]);
        if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("ContextGraph: repeated vertex in triple");
        edges.push_back({t[0], t[1]});
        edges.push_back({t[0], t[2]});
        edges.push_back({t[1], t[2]});
    }
    sort_unique(edges);
    sort_unique(triples);
}

OrthoGraph build_graph(const VectorSet& s) {
    const auto n = static_cast<long>(s.size());
    std::vector<std::vector<Vertex>> up(s.size());
    std::vector<Row> rows(s.size());
#pragma omp parallel
    {
#pragma omp for schedule(dynamic)
        for (long i = 0; i < n; ++i) adjacency_row(s, static_cast<Vertex>(i), up[static_cast<std::size_t>(i)]);
#pragma omp for schedule(dynamic)
        for (long i = 0; i < n; ++i) fill_row(s, up, static_cast<Vertex>(i), rows[static_cast<std::size_t>(i)]);
    }
    return assemble(s, rows);
}

OrthoGraph build_graph_serial(const VectorSet& s) {
    std::vector<std::vector<Vertex>> up(s.size());
    std::vector<Row> rows(s.size());
    for (Vertex i = 0; i < s.size(); ++i) adjacency_row(s, i, up[i]);
    for (Vertex i = 0; i < s.size(); ++i) fill_row(s, up, i, rows[i]);
    return assemble(s, rows);
}

std::vector<Triple> contexts_of(const ContextGraph& g, Vertex i) {
    if (i >= g.vertex_count) throw std::out_of_range("contexts_of: vertex index out of range");
    std::vector<Triple> out;
    for (const auto& t : g.triples)
        if (t[0] == i || t[1] == i || t[2] == i) out.push_back(t);
    return out;
}

GraphStats graph_stats(const ContextGraph& g) {
    std::vector<Edge> covered;
    covered.reserve(g.triples.size() * 3);
    for (const auto& t : g.triples) {
        covered.push_back({t[0], t[1]});
        covered.push_back({t[0], t[2]});
        covered.push_back({t[1], t[2]});
    }
    sort_unique(covered);
    std::size_t bare = 0;
    for (const auto& e : g.edges)
        if (!std::binary_search(covered.begin(), covered.end(), e)) ++bare;
    return {g.vertex_count, g.edges.size(), g.triples.size(), bare};
}

bool has_edge(const ContextGraph& g, Vertex a, Vertex b) {
    if (a == b) return false;
    return std::binary_search(g.edges.begin(), g.edges.end(), make_edge(a, b));
}

bool has_triple(const ContextGraph& g, Vertex a, Vertex b, Vertex c) {
    return std::binary_search(g.triples.begin(), g.triples.end(), make_triple(a, b, c));
}

}  // namespace ks
