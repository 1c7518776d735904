#pragma once

#include <vector>

#include "asr/graph.hpp"

namespace asr {

struct Block {
    Subgraph sub;  // ids in the decomposed graph
    Graph graph;   // compacted copy
};

bool is_connected(const Graph& g);

// at least 3 vertices, connected, no cut vertex
bool is_two_connected(const Graph& g);

// Maximal 2-connected blocks; a bridge is a 2-vertex block. Every edge lies
// in exactly one block. Ordered by smallest edge id.
std::vector<Block> block_decomposition(const Graph& g);

std::vector<int> cut_vertices(const Graph& g);

}  // namespace asr
