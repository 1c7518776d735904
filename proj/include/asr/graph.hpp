#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace asr {

struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Undirected simple graph on vertices [0, vertex_count). Edges are kept
// sorted, so an edge id (index into edges()) is stable for equal graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edges() const { return !edges_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int min_degree() const;

    bool has_edge(int a, int b) const { return edge_id(a, b) >= 0; }
    // -1 when absent
    int edge_id(int a, int b) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> ids_;
};

// A subgraph of some host, named by host vertex and edge ids (both sorted).
struct Subgraph {
    std::vector<int> vertices;
    std::vector<int> edges;
    auto operator<=>(const Subgraph&) const = default;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

// vertex set = union, edge set = union; vertex ids shared
Graph graph_union(const Graph& a, const Graph& b);

// new_label[v] gives the image of v; must be a permutation
Graph relabel(const Graph& g, const std::vector<int>& new_label);

// subgraph on the given host vertices, relabelled 0.. in sorted order
Graph induced_subgraph(const Graph& g, std::vector<int> vertices);

Subgraph subgraph_from_edges(const Graph& host, std::vector<int> edge_ids);
Subgraph subgraph_union(const Subgraph& a, const Subgraph& b);
bool is_subset(const std::vector<int>& small, const std::vector<int>& big);

// Compact a host subgraph to a standalone Graph; vertex i of the result is
// host vertex sub.vertices[i].
Graph to_graph(const Graph& host, const Subgraph& sub);

std::vector<int> sorted_unique(std::vector<int> v);

std::string describe(const Graph& g);

}  // namespace asr
