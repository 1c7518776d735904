#include "asr/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asr {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("parallel edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n), {});
    ids_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[static_cast<std::size_t>(i)];
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        ids_[static_cast<std::size_t>(e.u) * n + e.v] = i;
        ids_[static_cast<std::size_t>(e.v) * n + e.u] = i;
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::edge_id(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    return ids_[static_cast<std::size_t>(a) * n_ + b];
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, es);
}

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j});
    return Graph(a + b, es);
}

Graph graph_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    es.insert(es.end(), b.edges().begin(), b.edges().end());
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(std::max(a.vertex_count(), b.vertex_count()), es);
}

Graph relabel(const Graph& g, const std::vector<int>& new_label) {
    if (static_cast<int>(new_label.size()) != g.vertex_count())
        throw std::invalid_argument("relabel: size mismatch");
    std::vector<Edge> es;
    es.reserve(g.edges().size());
    for (const auto& e : g.edges()) es.push_back(make_edge(new_label[e.u], new_label[e.v]));
    return Graph(g.vertex_count(), es);
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    vertices = sorted_unique(std::move(vertices));
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back({pos[e.u], pos[e.v]});
    return Graph(static_cast<int>(vertices.size()), es);
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Subgraph subgraph_from_edges(const Graph& host, std::vector<int> edge_ids) {
    Subgraph s;
    s.edges = sorted_unique(std::move(edge_ids));
    for (int id : s.edges) {
        s.vertices.push_back(host.edge(id).u);
        s.vertices.push_back(host.edge(id).v);
    }
    s.vertices = sorted_unique(std::move(s.vertices));
    return s;
}

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b) {
    Subgraph s;
    std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                   std::back_inserter(s.vertices));
    std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                   std::back_inserter(s.edges));
    return s;
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Graph to_graph(const Graph& host, const Subgraph& sub) {
    std::vector<int> pos(static_cast<std::size_t>(host.vertex_count()), -1);
    for (std::size_t i = 0; i < sub.vertices.size(); ++i)
        pos[static_cast<std::size_t>(sub.vertices[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    es.reserve(sub.edges.size());
    for (int id : sub.edges) {
        const Edge& e = host.edge(id);
        if (pos[e.u] < 0 || pos[e.v] < 0) throw std::invalid_argument("subgraph edge outside its vertex set");
        es.push_back({pos[e.u], pos[e.v]});
    }
    return Graph(static_cast<int>(sub.vertices.size()), es);
}

std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " [";
    bool first = true;
    for (const auto& e : g.edges()) {
        if (!first) os << ' ';
        first = false;
        os << e.u << '-' << e.v;
    }
    os << ']';
    return os.str();
}

}  // namespace asr
