#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asr/graph.hpp"
#include "asr/rational.hpp"

namespace asr {

// H1 is l1-regular on v1 vertices, H2 is l2-regular on v2 vertices.
struct RegularPairParams {
    int v1 = 0, v2 = 0;
    int l1 = 0, l2 = 0;
    int e1() const { return v1 * l1 / 2; }
    int e2() const { return v2 * l2 / 2; }
    auto operator<=>(const RegularPairParams&) const = default;
};

// Reason the tuple describes no pair of regular graphs with l >= 2, or
// nothing when it is valid (v*l even, 2 <= l <= v-1).
std::optional<std::string> validation_error(const RegularPairParams& p);
// Throws std::invalid_argument on an invalid tuple.
RegularPairParams make_regular_params(int v1, int v2, int l1, int l2);
// Nothing unless both graphs are regular.
std::optional<RegularPairParams> regular_params_of(const Graph& h1, const Graph& h2);

// m2(H1,H2) = v1 l1 / (2v1 - 4 + (4v2 - 8)/(v2 l2 - 2)). Exact when H2 is
// 2-balanced and H1 is balanced w.r.t. d2(., H2). Pure arithmetic, no
// validation.
Rational m2_pair_regular(const RegularPairParams& p);

std::int64_t f_poly(std::int64_t v1, std::int64_t v2, std::int64_t l1, std::int64_t l2);
std::int64_t g_poly(std::int64_t v1, std::int64_t v2, std::int64_t l2);

enum class CertRoute { GeneralMonotone, Case1Cycle, Case2V1Is3, Case3V2Le4 };
// (i) a clique and a cycle, (ii) H2 a cycle with v1 >= v2, (iii) (K3, K3,3)
enum class Exclusion { CliqueAndCycle, CycleNotLonger, K3AndK33 };
enum class RejectionKind { ExcludedByTheorem, HypothesesUnmet };

struct EmptinessCertificate {
    RegularPairParams params;
    CertRoute route = CertRoute::GeneralMonotone;
    std::int64_t f = 0;
    std::int64_t route_bound = 0;  // lower bound on f the route proves
    Rational m2_pair;
    Rational degree_density;  // (l1 + l2 - 1)/2, a lower bound on d(A)
    Rational margin;          // degree_density - m2_pair > 0
    Rational epsilon_star;    // margin / 2
};

struct CertRejection {
    RejectionKind kind = RejectionKind::HypothesesUnmet;
    std::vector<Exclusion> exclusions;  // every matching exclusion
    std::string reason;
};

struct CertResult {
    std::optional<EmptinessCertificate> certificate;
    std::optional<CertRejection> rejection;
    bool ok() const { return certificate.has_value(); }
};

// Every 2-connected member of C has min degree >= l1 + l2 - 1 and so
// density >= (l1 + l2 - 1)/2; when that exceeds m2(H1,H2) the set A-hat is
// empty for every epsilon below the gap. From the parameters alone the
// hypotheses are checked through their consequence d2(H1) >= d2(H2) and
// H1 != H2 for cliques and cycles; (iii) is assumed for (3,6,2,3).
// Throws std::logic_error if a tuple passing every check has no positive
// bound, which would contradict the case analysis.
CertResult certify_emptiness(const RegularPairParams& p);
// Concrete graphs: regularity, the full pair hypotheses, H1 != H2, and (iii)
// by isomorphism; the closed form is checked against the density module.
CertResult certify_emptiness(const Graph& h1, const Graph& h2);

struct MinDegreeCheck {
    bool ok = true;
    int min_degree = 0;
    int low_vertex = -1;  // a vertex below l1 + l2 - 1, if any
    Rational density;     // e/v, 0 on the empty graph
};

// delta(a) >= l1 + l2 - 1 and e/v >= (l1 + l2 - 1)/2. Vacuous on an empty
// vertex set.
MinDegreeCheck min_degree_bound_check(const Graph& a, const RegularPairParams& p);

struct RegularSweepRow {
    RegularPairParams params;
    std::int64_t f = 0;
    Rational margin;    // (l1 + l2 - 1)/2 - closed-form m2
    std::string route;  // route name, "excluded" or "hypotheses_unmet"
};

// All valid tuples with 3 <= v1 <= v1max, 3 <= v2 <= v2max.
std::vector<RegularSweepRow> regular_sweep(int v1max, int v2max);
// header v1,l1,v2,l2,f,margin,route
std::string regular_sweep_csv(const std::vector<RegularSweepRow>& rows);

std::string to_string(CertRoute r);
std::string to_string(Exclusion e);
std::string to_string(RejectionKind k);

}  // namespace asr
