#include "asr/regular_pairs.hpp"

#include <sstream>
#include <stdexcept>

#include "asr/canonical.hpp"
#include "asr/density.hpp"
#include "asr/pair_spec.hpp"

namespace asr {

namespace {

bool is_clique(int v, int l) { return l == v - 1; }
bool is_cycle(int l) { return l == 2; }

// d2 of an l-regular graph on v >= 3 vertices
Rational d2_regular(int v, int l) { return Rational(v * l / 2 - 1, v - 2); }

std::vector<Exclusion> matching_exclusions(const RegularPairParams& p) {
    std::vector<Exclusion> out;
    bool clique_cycle = (is_clique(p.v1, p.l1) && is_cycle(p.l2)) || (is_cycle(p.l1) && is_clique(p.v2, p.l2));
    if (clique_cycle) out.push_back(Exclusion::CliqueAndCycle);
    if (is_cycle(p.l2) && p.v1 >= p.v2) out.push_back(Exclusion::CycleNotLonger);
    if (p == RegularPairParams{3, 6, 2, 3}) out.push_back(Exclusion::K3AndK33);
    return out;
}

CertResult reject(RejectionKind kind, std::vector<Exclusion> ex, std::string reason) {
    CertResult r;
    r.rejection = CertRejection{kind, std::move(ex), std::move(reason)};
    return r;
}

std::string exclusion_list(const std::vector<Exclusion>& ex) {
    std::string s;
    for (Exclusion e : ex) s += (s.empty() ? "" : ", ") + to_string(e);
    return s;
}

// parameter-level hypothesis failure, if any
std::optional<std::string> unmet_hypothesis(const RegularPairParams& p) {
    if (auto err = validation_error(p)) return err;
    if (p.v1 == p.v2 && p.l1 == p.l2 && (is_clique(p.v1, p.l1) || is_cycle(p.l1)))
        return "H1 = H2 (same clique or cycle)";
    Rational d1 = d2_regular(p.v1, p.l1), d2 = d2_regular(p.v2, p.l2);
    if (d1 < d2)
        return "m2(H1) >= m2(H2) cannot hold: d2(H1) = " + to_string(d1) + " < d2(H2) = " + to_string(d2) +
               " = m2(H2)";
    return std::nullopt;
}

EmptinessCertificate build_certificate(const RegularPairParams& p) {
    EmptinessCertificate c;
    c.params = p;
    c.f = f_poly(p.v1, p.v2, p.l1, p.l2);
    if (p.v1 >= 4 && p.v2 >= 5 && p.l2 >= 3) {
        c.route = CertRoute::GeneralMonotone;
        // f >= g(v1,v2,l2) >= g(4,5,3)
        if (c.f < g_poly(p.v1, p.v2, p.l2) || g_poly(p.v1, p.v2, p.l2) < g_poly(4, 5, 3))
            throw std::logic_error("general route bound fails");
        c.route_bound = g_poly(4, 5, 3);
    } else if (p.l2 == 2) {
        c.route = CertRoute::Case1Cycle;
        if (p.l1 > p.v1 - 2 || p.v2 <= p.v1) throw std::logic_error("cycle route reached an excluded pair");
        c.route_bound = 2 * (p.v2 - p.v1);
    } else if (p.v1 == 3) {
        c.route = CertRoute::Case2V1Is3;
        if (p.l2 != 3 || p.v2 < 7) throw std::logic_error("triangle route needs l2 = 3 and v2 >= 7");
        if (c.f != p.v2 * (p.l2 - 2) - 6) throw std::logic_error("triangle route identity fails");
        c.route_bound = p.v2 * (p.l2 - 2) - 6;
    } else {
        c.route = CertRoute::Case3V2Le4;
        if (p.v2 != 4 || p.l2 != 3) throw std::logic_error("K4 route needs H2 = K4");
        if (p.v1 >= p.l1 + 2) c.route_bound = 2 * (p.l1 + 2);
        else c.route_bound = 2 * p.v1 - 8;
    }
    if (c.f < c.route_bound || c.route_bound <= 0) {
        std::ostringstream os;
        os << "route " << to_string(c.route) << " gives f = " << c.f << ", bound " << c.route_bound;
        throw std::logic_error(os.str());
    }
    c.m2_pair = m2_pair_regular(p);
    c.degree_density = Rational(p.l1 + p.l2 - 1, 2);
    c.margin = c.degree_density - c.m2_pair;
    if (c.margin <= 0) throw std::logic_error("f > 0 but the density gap is not positive");
    c.epsilon_star = c.margin / Rational(2);
    return c;
}

}  // namespace

std::optional<std::string> validation_error(const RegularPairParams& p) {
    auto one = [](int v, int l, const char* name) -> std::optional<std::string> {
        std::string n(name);
        if (l < 2) return "l" + n + " >= 2 fails (H" + n + " would be a matching or edgeless)";
        if (l > v - 1) return "l" + n + " <= v" + n + " - 1 fails";
        if ((v * l) % 2 != 0) return "v" + n + " * l" + n + " is odd (no such regular graph)";
        return std::nullopt;
    };
    if (auto e = one(p.v1, p.l1, "1")) return e;
    return one(p.v2, p.l2, "2");
}

RegularPairParams make_regular_params(int v1, int v2, int l1, int l2) {
    RegularPairParams p{v1, v2, l1, l2};
    if (auto e = validation_error(p)) throw std::invalid_argument(*e);
    return p;
}

std::optional<RegularPairParams> regular_params_of(const Graph& h1, const Graph& h2) {
    auto degree = [](const Graph& g) -> std::optional<int> {
        if (g.vertex_count() == 0) return std::nullopt;
        int d = g.degree(0);
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) != d) return std::nullopt;
        return d;
    };
    auto a = degree(h1), b = degree(h2);
    if (!a || !b) return std::nullopt;
    return RegularPairParams{h1.vertex_count(), h2.vertex_count(), *a, *b};
}

Rational m2_pair_regular(const RegularPairParams& p) {
    Rational den = Rational(2 * p.v1 - 4) + Rational(4 * p.v2 - 8, p.v2 * p.l2 - 2);
    return Rational(p.v1 * p.l1) / den;
}

std::int64_t f_poly(std::int64_t v1, std::int64_t v2, std::int64_t l1, std::int64_t l2) {
    return v1 * v2 * l2 - 2 * v1 - 2 * v2 * l1 - 2 * v2 * l2 + 2 * v2;
}

std::int64_t g_poly(std::int64_t v1, std::int64_t v2, std::int64_t l2) {
    return v1 * v2 * (l2 - 2) - 2 * v1 + 4 * v2 - 2 * v2 * l2;
}

CertResult certify_emptiness(const RegularPairParams& p) {
    std::vector<Exclusion> ex = validation_error(p) ? std::vector<Exclusion>{} : matching_exclusions(p);
    if (auto why = unmet_hypothesis(p)) return reject(RejectionKind::HypothesesUnmet, std::move(ex), *why);
    if (!ex.empty()) {
        std::string why = "excluded: " + exclusion_list(ex);
        return reject(RejectionKind::ExcludedByTheorem, std::move(ex), why);
    }
    CertResult r;
    r.certificate = build_certificate(p);
    return r;
}

CertResult certify_emptiness(const Graph& h1, const Graph& h2) {
    auto params = regular_params_of(h1, h2);
    if (!params) return reject(RejectionKind::HypothesesUnmet, {}, "H1 and H2 must both be regular");
    const RegularPairParams& p = *params;
    if (auto err = validation_error(p)) return reject(RejectionKind::HypothesesUnmet, {}, *err);
    if (are_isomorphic(h1, h2)) return reject(RejectionKind::HypothesesUnmet, {}, "H1 = H2");

    std::vector<Exclusion> ex = matching_exclusions(p);
    // the parameters of (iii) also fit the prism; only K3,3 is excluded
    if (p == RegularPairParams{3, 6, 2, 3} && !are_isomorphic(h2, complete_bipartite(3, 3)))
        std::erase(ex, Exclusion::K3AndK33);

    PairSpec pair;
    try {
        pair = build_pair_spec(h1, h2);
    } catch (const InvalidPair& e) {
        return reject(RejectionKind::HypothesesUnmet, std::move(ex), e.what());
    }
    if (!pair.h2_strictly_two_balanced)
        return reject(RejectionKind::HypothesesUnmet, std::move(ex), "H2 is not strictly 2-balanced");
    if (!pair.hypotheses_hold())
        return reject(RejectionKind::HypothesesUnmet, std::move(ex),
                      pair.pair_case == PairCase::Strict ? "H1 is not strictly balanced w.r.t. d2(., H2)"
                                                         : "H1 is not strictly 2-balanced");
    if (!ex.empty()) {
        std::string why = "excluded: " + exclusion_list(ex);
        return reject(RejectionKind::ExcludedByTheorem, std::move(ex), why);
    }
    if (pair.m2_pair != m2_pair_regular(p))
        throw std::logic_error("closed-form m2(H1,H2) = " + to_string(m2_pair_regular(p)) +
                               " disagrees with the density module: " + to_string(pair.m2_pair));
    CertResult r;
    r.certificate = build_certificate(p);
    return r;
}

MinDegreeCheck min_degree_bound_check(const Graph& a, const RegularPairParams& p) {
    MinDegreeCheck out;
    if (a.vertex_count() == 0) return out;
    const int need = p.l1 + p.l2 - 1;
    out.min_degree = a.min_degree();
    for (int v = 0; v < a.vertex_count(); ++v)
        if (a.degree(v) < need) {
            out.low_vertex = v;
            break;
        }
    out.density = Rational(a.edge_count(), a.vertex_count());
    out.ok = out.low_vertex < 0 && out.density >= Rational(need, 2);
    return out;
}

std::vector<RegularSweepRow> regular_sweep(int v1max, int v2max) {
    std::vector<RegularSweepRow> rows;
    for (int v1 = 3; v1 <= v1max; ++v1)
        for (int l1 = 2; l1 <= v1 - 1; ++l1)
            for (int v2 = 3; v2 <= v2max; ++v2)
                for (int l2 = 2; l2 <= v2 - 1; ++l2) {
                    RegularPairParams p{v1, v2, l1, l2};
                    if (validation_error(p)) continue;
                    RegularSweepRow row;
                    row.params = p;
                    row.f = f_poly(v1, v2, l1, l2);
                    row.margin = Rational(l1 + l2 - 1, 2) - m2_pair_regular(p);
                    CertResult c = certify_emptiness(p);
                    if (c.ok()) row.route = to_string(c.certificate->route);
                    else if (c.rejection->kind == RejectionKind::ExcludedByTheorem) row.route = "excluded";
                    else row.route = "hypotheses_unmet";
                    rows.push_back(std::move(row));
                }
    return rows;
}

std::string regular_sweep_csv(const std::vector<RegularSweepRow>& rows) {
    std::ostringstream os;
    os << "v1,l1,v2,l2,f,margin,route\n";
    for (const auto& r : rows)
        os << r.params.v1 << ',' << r.params.l1 << ',' << r.params.v2 << ',' << r.params.l2 << ',' << r.f << ','
           << to_string(r.margin) << ',' << r.route << '\n';
    return os.str();
}

std::string to_string(CertRoute r) {
    switch (r) {
        case CertRoute::GeneralMonotone: return "general_monotone";
        case CertRoute::Case1Cycle: return "case1_cycle";
        case CertRoute::Case2V1Is3: return "case2_v1_is_3";
        case CertRoute::Case3V2Le4: return "case3_v2_le_4";
    }
    return "?";
}

std::string to_string(Exclusion e) {
    switch (e) {
        case Exclusion::CliqueAndCycle: return "(i) clique and cycle";
        case Exclusion::CycleNotLonger: return "(ii) H2 a cycle with v1 >= v2";
        case Exclusion::K3AndK33: return "(iii) (K3, K3,3)";
    }
    return "?";
}

std::string to_string(RejectionKind k) {
    return k == RejectionKind::ExcludedByTheorem ? "excluded_by_theorem" : "hypotheses_unmet";
}

}  // namespace asr
