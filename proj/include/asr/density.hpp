#pragma once

#include <cstdint>
#include <vector>

#include "asr/graph.hpp"
#include "asr/rational.hpp"

namespace asr {

// A maximum together with the vertex set of an induced subgraph achieving it.
struct Extremum {
    Rational value;
    std::vector<int> vertices;
};

struct DensityProfile {
    Rational d, m, d2, m2;
    std::vector<int> witness_m;
    std::vector<int> witness_m2;
};

enum class Balance { balanced, strictly_balanced, two_balanced, strictly_two_balanced };

Rational d_density(const Graph& g);
Rational d2_density(const Graph& g);

// densest subgraph; the witness is the inclusion-minimal one
Extremum m_density(const Graph& g);
// exhaustive over vertex subsets; at most 26 vertices
Extremum m2_density(const Graph& g);

Rational d2_asym(const Graph& g1, const Rational& m2_h2);
Rational d2_asym(const Graph& g1, const Graph& h2);
Extremum m2_asym(const Graph& h1, const Rational& m2_h2);
Extremum m2_asym(const Graph& h1, const Graph& h2);

DensityProfile density_profile(const Graph& g);

bool balancedness(const Graph& g, Balance mode);
// balanced (or strictly) with respect to d2(., h2)
bool asym_balancedness(const Graph& h1, const Graph& h2, bool strict);

// lambda = v - e / m2_pair
Rational lambda(int vertices, int edges, const Rational& m2_pair);
Rational lambda(const Graph& f, const Rational& m2_pair);

// Maximises e(S) - t|S| over vertex sets S (t > 0). Both the inclusion-minimal
// and the inclusion-maximal maximisers are returned; value is exact.
struct ClosureResult {
    Rational value;
    std::vector<int> min_set;
    std::vector<int> max_set;
};
ClosureResult max_excess_subgraph(const Graph& g, const Rational& t);

}  // namespace asr
