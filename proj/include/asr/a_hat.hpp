#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asr/coloring.hpp"
#include "asr/copies.hpp"
#include "asr/graph.hpp"
#include "asr/pair_spec.hpp"

namespace asr {

// 2-connected, m(A) <= m2(H1,H2) + eps, and in C* (Strict) or C (Equal).
bool a_hat_membership(const Graph& a, const PairSpec& pair);

struct AHatMember {
    Graph graph;  // canonical form
    Verdict verdict = Verdict::BudgetExceeded;
    Coloring coloring;  // set when Valid
};

struct AHatEnumeration {
    std::vector<AHatMember> members;
    int bound = 0;            // max vertices searched
    bool all_sizes = false;   // emptiness holds at every size, not just up to bound
    std::string method;       // "min-degree", "bound" or "search"
    std::uint64_t classes = 0;  // isomorphism classes visited by the search

    std::vector<Graph> graphs() const;
};

// Every member of the family up to max_vertices vertices, up to isomorphism.
// Members of C are unions of H1-copies (each edge is the shared edge of some
// (L,R) pair), so the search grows connected unions of H1-copies and prunes
// on m, which cannot drop when passing to a supergraph. When
// (delta(H1)+delta(H2)-1)/2 > m2(H1,H2)+eps no 2-connected member of C is
// sparse enough and the family is empty at every size ("min-degree"); pass
// use_degree_bound=false to run the search anyway.
AHatEnumeration enumerate_a_hat(const PairSpec& pair, int max_vertices, bool use_degree_bound = true,
                                std::uint64_t oracle_budget = kDefaultBudget);

// Maximal subgraphs isomorphic to a member of a_hat.
struct SgDecomposition {
    Graph graph;
    std::vector<Subgraph> members;              // S_G, sorted
    std::vector<int> per_edge_count;            // |S_G(e)| by edge id
    std::vector<std::vector<int>> edge_members; // member ids containing each edge
    std::vector<Subgraph> nontrivial;           // T_G: H1/H2 copies meeting >= 2 members

    bool is_a_hat_graph() const;
    bool is_sparse() const { return nontrivial.empty(); }
};

SgDecomposition sg_decompose(const Graph& g, const PairSpec& pair, const std::vector<Graph>& a_hat);

struct AColourResult {
    bool ok = false;
    Coloring coloring;
    std::string failure;  // set when !ok
};

// Colours each member of S_G with the oracle and composes the colourings.
// A member without a valid colouring is reported, not thrown: it would
// refute the finiteness-and-colourability conjecture for this pair and eps.
AColourResult a_colour(const Graph& g, const PairSpec& pair, const std::vector<Graph>& a_hat,
                       std::uint64_t budget = kDefaultBudget);
AColourResult a_colour(const SgDecomposition& dec, const PairSpec& pair, std::uint64_t budget = kDefaultBudget);

}  // namespace asr
