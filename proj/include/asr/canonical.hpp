#pragma once

#include <string>
#include <vector>

#include "asr/graph.hpp"

namespace asr {

struct CanonicalForm {
    Graph graph;
    std::vector<int> labeling;  // labeling[v] = canonical label of vertex v
};

// Isomorphic inputs give identical graphs. Colour refinement plus
// individualisation search, pruned by twins and discovered automorphisms.
CanonicalForm canonical_form(const Graph& g);

// graph6 of the canonical graph
std::string canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace asr
