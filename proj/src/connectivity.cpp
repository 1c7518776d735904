#include "asr/connectivity.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/connected_components.hpp>

namespace asr {

namespace {

struct EdgeData {
    int id = 0;
    std::size_t component = 0;
};

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property, EdgeData>;

BGraph to_bgl(const Graph& g) {
    BGraph b(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.edge_count(); ++i) {
        boost::add_edge(g.edge(i).u, g.edge(i).v, EdgeData{i, 0}, b);
    }
    return b;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    BGraph b = to_bgl(g);
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()));
    return boost::connected_components(b, comp.data()) == 1;
}

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    return cut_vertices(g).empty();
}

std::vector<int> cut_vertices(const Graph& g) {
    BGraph b = to_bgl(g);
    std::vector<int> arts;
    boost::articulation_points(b, std::back_inserter(arts));
    std::sort(arts.begin(), arts.end());
    return arts;
}

std::vector<Block> block_decomposition(const Graph& g) {
    BGraph b = to_bgl(g);
    boost::biconnected_components(b, boost::get(&EdgeData::component, b));
    std::map<std::size_t, std::vector<int>> by_comp;
    for (auto [it, end] = boost::edges(b); it != end; ++it) by_comp[b[*it].component].push_back(b[*it].id);
    std::vector<Block> blocks;
    for (auto& [c, ids] : by_comp) {
        Block blk;
        blk.sub = subgraph_from_edges(g, ids);
        blk.graph = to_graph(g, blk.sub);
        blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& x, const Block& y) { return x.sub.edges.front() < y.sub.edges.front(); });
    return blocks;
}

}  // namespace asr
