#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asr/copies.hpp"
#include "asr/graph.hpp"
#include "asr/pair_spec.hpp"

namespace asr {

// Copies of H1 (the R's) and H2 (the L's) in a graph, with the pairs that
// meet in exactly one edge.
struct CopyIndex {
    CopySet r;
    CopySet l;
    std::vector<std::vector<int>> r_by_edge;
    std::vector<std::vector<int>> l_by_edge;
    // unique_r[li][k]: R ids with E(L) ∩ E(R) = {k-th edge of L}
    std::vector<std::vector<std::vector<int>>> unique_r;
};

CopyIndex build_copy_index(const Graph& g, const PairSpec& pair);

// L ids in the index whose every edge has a uniquely-intersecting R
std::vector<int> lstar_ids(const CopyIndex& idx);
CopySet lstar_members(const Graph& g, const PairSpec& pair);

struct Membership {
    bool member = false;
    std::vector<int> failing_edges;  // edges violating the condition
    std::map<int, int> witness;      // in_Cstar: edge -> L* id (into the index)
};

Membership in_C(const Graph& g, const PairSpec& pair);
Membership in_Cstar(const Graph& g, const PairSpec& pair);
Membership in_C(const Graph& g, const CopyIndex& idx);
Membership in_Cstar(const Graph& g, const CopyIndex& idx);

struct FamilyReport {
    Graph graph;
    bool in_C = false;
    bool in_Cstar = false;
    CopySet lstar_copies;
    std::vector<int> c_failures;
    std::vector<int> cstar_failures;
};

FamilyReport family_report(const Graph& g, const PairSpec& pair);

}  // namespace asr
