#pragma once

#include <functional>
#include <vector>

#include "asr/graph.hpp"

namespace asr {

struct Embedding {
    std::vector<int> vertex_map;  // pattern vertex -> host vertex
    std::vector<int> edge_image;  // host edge ids, sorted
};

// Subgraphs of a host isomorphic to a pattern, deduplicated by edge image and
// sorted by edge image.
struct CopySet {
    Graph pattern;
    std::vector<Subgraph> copies;
    std::size_t size() const { return copies.size(); }
    bool empty() const { return copies.empty(); }
};

// Calls visit for every injective homomorphism of pattern into host (one per
// embedding, so each copy is visited |Aut(pattern)| times). Returning false
// from visit stops the search.
void for_each_embedding(const Graph& host, const Graph& pattern,
                        const std::function<bool(const Embedding&)>& visit);

CopySet enumerate_copies(const Graph& host, const Graph& pattern);

bool contains_copy(const Graph& host, const Graph& pattern);

}  // namespace asr
