// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "asr/a_hat.hpp"
#include "asr/canonical.hpp"
#include "asr/colorer.hpp"
#include "asr/connectivity.hpp"
#include "asr/density.hpp"
#include "asr/grow.hpp"
#include "asr/harness.hpp"
#include "asr/regular_pairs.hpp"
#include "oracles.hpp"

using namespace asr;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;
    void fail(const std::string& why) {
        pass = false;
        if (failures.size() < 10) failures.push_back(why);
    }
};

Graph prism() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

Graph cube() {
    std::vector<Edge> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (int w = v ^ (1 << b); v < w) es.push_back({v, w});
    return Graph(8, es);
}

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(make_edge(i, (i + 1) % 5));
        es.push_back(make_edge(i, i + 5));
        es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, es);
}

Graph wheel(int rim) {
    std::vector<Edge> es;
    for (int i = 0; i < rim; ++i) {
        es.push_back(make_edge(i, (i + 1) % rim));
        es.push_back(make_edge(i, rim));
    }
    return Graph(rim + 1, es);
}

std::string short_name(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() == n * (n - 1) / 2) return "K" + std::to_string(n);
    if (n >= 3 && oracle::naive_isomorphic(g, cycle_graph(n))) return "C" + std::to_string(n);
    return describe(g);
}

std::string name_of(const PairSpec& p) { return "(" + short_name(p.h1) + "," + short_name(p.h2) + ")"; }

// every graph on n + 1 vertices is some graph on n vertices plus a vertex
std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& smaller) {
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const Graph& g : smaller) {
        int n = g.vertex_count();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Edge> es = g.edges();
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) es.push_back({v, n});
            Graph h(n + 1, es);
            if (seen.insert(canonical_key(h)).second) out.push_back(std::move(h));
        }
    }
    return out;
}

// ---- 1 ----------------------------------------------------------------

Outcome density_golden() {
    Outcome o;
    auto expect = [&](const std::string& what, const Rational& got, const Rational& want) {
        if (got != want) o.fail(what + " = " + to_string(got) + ", expected " + to_string(want));
    };
    expect("m2(K3)", m2_density(complete_graph(3)).value, 2);
    expect("m2(K4)", m2_density(complete_graph(4)).value, Rational(5, 2));
    expect("m2(C4)", m2_density(cycle_graph(4)).value, Rational(3, 2));
    expect("m2(K3,3)", m2_density(complete_bipartite(3, 3)).value, Rational(8, 4));
    expect("m2(K4,C4)", m2_asym(complete_graph(4), cycle_graph(4)).value, Rational(9, 4));
    // the same numbers from the brute-force oracle
    expect("naive m2(K4)", oracle::naive_densities(complete_graph(4)).m2, Rational(5, 2));
    expect("naive m2(K3,3)", oracle::naive_densities(complete_bipartite(3, 3)).m2, 2);
    Rational naive_asym;
    oracle::naive_densities(complete_graph(4), Rational(3, 2), &naive_asym);
    expect("naive m2(K4,C4)", naive_asym, Rational(9, 4));

    std::vector<Graph> h2s = {complete_graph(3), complete_graph(4), complete_graph(5), cycle_graph(4),
                              cycle_graph(5),    cycle_graph(6),    complete_bipartite(3, 3), prism(),
                              cube(),            petersen()};
    Graph k2(2, {{0, 1}});
    for (const Graph& h2 : h2s) {
        Rational m2 = oracle::naive_densities(h2).m2;
        expect("m2 of " + describe(h2), m2_density(h2).value, m2);
        expect("d2(K2," + describe(h2) + ")", d2_asym(k2, h2), m2);
    }
    o.detail = "5 golden values, d2(K2,H2) = m2(H2) for 10 graphs";
    return o;
}

// ---- 2 ----------------------------------------------------------------

Outcome sandwich_suite() {
    Outcome o;
    std::vector<Graph> graphs;
    for (int n = 2; n <= 6; ++n)
        for (Graph& g : oracle::all_graphs_up_to_iso(n))
            if (g.has_edges()) graphs.push_back(std::move(g));
    std::vector<Rational> m2(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) m2[i] = m2_density(graphs[i]).value;
    long pairs = 0, strict = 0;
    for (std::size_t a = 0; a < graphs.size(); ++a)
        for (std::size_t b = 0; b < graphs.size(); ++b) {
            if (m2[a] < m2[b]) continue;
            ++pairs;
            Rational mid = m2_asym(graphs[a], m2[b]).value;
            bool ok = m2[a] >= mid && mid >= m2[b];
            if (m2[a] > m2[b]) {
                ++strict;
                ok = ok && m2[a] > mid && mid > m2[b];
            }
            if (!ok)
                o.fail(describe(graphs[a]) + " / " + describe(graphs[b]) + ": " + to_string(m2[a]) + ", " +
                       to_string(mid) + ", " + to_string(m2[b]));
        }
    // spot-check the asymmetric density against the subset oracle
    std::mt19937_64 rng(5);
    for (int k = 0; k < 300; ++k) {
        std::size_t a = rng() % graphs.size(), b = rng() % graphs.size();
        if (graphs[a].edge_count() > 12) continue;
        Rational naive;
        oracle::naive_densities(graphs[a], m2[b], &naive);
        if (naive != m2_asym(graphs[a], m2[b]).value) o.fail("m2_asym disagrees with the oracle on " + describe(graphs[a]));
    }
    o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(pairs) + " ordered pairs (" +
               std::to_string(strict) + " strict)";
    return o;
}

// ---- 3 ----------------------------------------------------------------

Outcome two_connectivity_suite() {
    Outcome o;
    std::vector<std::vector<Graph>> by_n(8);
    for (int n = 1; n <= 6; ++n) by_n[n] = oracle::all_graphs_up_to_iso(n);
    by_n[7] = extend_by_one_vertex(by_n[6]);
    // known class counts: 156 graphs on 6 vertices, 1044 on 7
    if (by_n[6].size() != 156) o.fail("expected 156 graphs on 6 vertices, got " + std::to_string(by_n[6].size()));
    if (by_n[7].size() != 1044) o.fail("expected 1044 graphs on 7 vertices, got " + std::to_string(by_n[7].size()));

    int strict_graphs = 0;
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : by_n[n]) {
            if (!g.has_edges() || m2_density(g).value <= 1) continue;
            if (!balancedness(g, Balance::strictly_two_balanced)) continue;
            ++strict_graphs;
            if (!oracle::naive_two_connected(g) || !is_two_connected(g))
                o.fail("strictly 2-balanced but not 2-connected: " + describe(g));
        }

    std::vector<Graph> small;
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : by_n[n])
            if (g.has_edges()) small.push_back(g);
    std::vector<Rational> m2(small.size());
    std::vector<char> s2b(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
        m2[i] = m2_density(small[i]).value;
        s2b[i] = balancedness(small[i], Balance::strictly_two_balanced);
    }
    int hyp_i = 0, hyp_ii = 0;
    for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = 0; b < small.size(); ++b) {
            if (!(m2[b] > 1) || m2[a] < m2[b] || !s2b[b]) continue;
            bool holds;
            if (m2[a] > m2[b]) {
                holds = asym_balancedness(small[a], small[b], true);
                hyp_i += holds;
            } else {
                holds = s2b[a];
                hyp_ii += holds;
            }
            if (!holds) continue;
            if (!oracle::naive_two_connected(small[a]) || !oracle::naive_two_connected(small[b]))
                o.fail("hypothesis pair without 2-connected graphs: " + describe(small[a]) + " / " + describe(small[b]));
        }
    if (hyp_i == 0) o.fail("no hypothesis-(i) pairs found");
    o.detail = std::to_string(strict_graphs) + " strictly 2-balanced graphs on <= 7 vertices, " +
               std::to_string(hyp_i) + " hypothesis-(i) and " + std::to_string(hyp_ii) + " hypothesis-(ii) pairs";
    return o;
}

// ---- 4 and 6 ----------------------------------------------------------

struct TraceRecord {
    const PairSpec* pair;
    GrowTrace trace;
};

struct ColorerRun {
    Outcome outcome;
    std::vector<TraceRecord> traces;
    std::vector<PairSpec> pairs;
};

void colorer_soundness(ColorerRun& run) {
    Outcome& o = run.outcome;
    run.pairs = {build_pair_spec(complete_graph(4), cycle_graph(4)), build_pair_spec(complete_graph(5), cycle_graph(4)),
                 build_pair_spec(complete_graph(3), complete_graph(3))};
    const std::vector<int> ns = {20, 30, 40};
    const std::vector<Rational> bs = {Rational(1, 4), Rational(1, 2), Rational(1)};
    const int per_cell = 500;
    std::ostringstream detail;
    long colored_total = 0;
    for (const PairSpec& pair : run.pairs) {
        auto fam = enumerate_a_hat(pair, 7).graphs();
        int trials = 0, colored = 0, stuck = 0, acf = 0;
        for (int n : ns)
            for (const Rational& b : bs)
                for (int t = 0; t < per_cell; ++t) {
                    TrialConfig c{pair, fam, n, b, derive_seed(4, n, b.numerator(), b.denominator(), t),
                                  kDefaultBudget, TrialMode::FullPipeline};
                    TrialResult r;
                    try {
                        r = run_trial(c, true);
                    } catch (const std::exception& e) {
                        o.fail(name_of(pair) + " seed " + std::to_string(c.seed) + ": " + e.what());
                        continue;
                    }
                    ++trials;
                    if (r.colorer == ColorerStatus::Colored) {
                        ++colored;
                        if (!r.verified) o.fail(name_of(pair) + " seed " + std::to_string(c.seed) + ": " + r.failure);
                    } else if (r.colorer == ColorerStatus::Stuck) {
                        ++stuck;
                        if (r.trace) run.traces.push_back({&pair, std::move(*r.trace)});
                        if (!r.grow_error.empty()) o.fail(name_of(pair) + " grow aborted: " + r.grow_error);
                    } else {
                        ++acf;
                    }
                }
        colored_total += colored;
        detail << name_of(pair) << ": " << trials << " trials, " << colored << " colored, " << stuck
               << " stuck, " << acf << " a-colour failures; ";
    }
    o.detail = detail.str() + "every colored outcome verified";
}

// direct re-derivation of the trace claims from recorded sizes and overlaps
void check_trace(const GrowTrace& t, const PairSpec& pair, Outcome& o, int& nondeg, int& deg) {
    if (t.seed_edge < 0) return;  // special-case return, no loop
    auto lam = [&](long v, long e) { return Rational(v) - Rational(e) / pair.m2_pair; };
    long v = static_cast<long>(t.seed.vertices.size()), e = static_cast<long>(t.seed.edges.size());
    Rational want = Rational(2) - Rational(1) / pair.m2_h2;
    if (lam(v, e) != want || t.lambda_seed != want)
        o.fail("lambda(F0) = " + to_string(lam(v, e)) + " on " + name_of(pair) + ", expected " + to_string(want));
    for (const GrowStep& s : t.steps) {
        if (s.kind == StepKind::SpecialCase1 || s.kind == StepKind::SpecialCase2) continue;
        if (s.lambda_before != lam(v, e)) o.fail("step " + std::to_string(s.i) + ": lambda_before off");
        v += s.added_vertices;
        e += s.added_edges;
        if (s.lambda_after != lam(v, e)) o.fail("step " + std::to_string(s.i) + ": lambda_after off");
        bool degenerate = s.kind == StepKind::AttachR || s.attached_overlap != 2;
        if (s.kind == StepKind::ExtendL)
            for (int ov : s.pendant_overlaps) degenerate = degenerate || ov != 2;
        if (degenerate != s.degenerate) o.fail("step " + std::to_string(s.i) + ": degeneracy flag disagrees");
        if (degenerate) {
            ++deg;
            if (!(s.lambda_after < s.lambda_before)) o.fail("degenerate step kept lambda on " + name_of(pair));
        } else {
            ++nondeg;
            if (s.lambda_after != s.lambda_before) o.fail("non-degenerate step changed lambda on " + name_of(pair));
        }
    }
}

Outcome lambda_claims(const ColorerRun& run) {
    Outcome o;
    int nondeg = 0, deg = 0;
    for (const auto& rec : run.traces) check_trace(rec.trace, *rec.pair, o, nondeg, deg);
    const int main_traces = static_cast<int>(run.traces.size());
    const int main_nondeg = nondeg, main_deg = deg;

    // strict-case pairs rarely get stuck at these sizes; denser samples
    // exercise GROW as well
    int extra = 0;
    for (int k = 0; k < 2; ++k) {
        const PairSpec& pair = run.pairs[static_cast<std::size_t>(k)];
        for (int n : {12, 14})
            for (int t = 0; t < 15; ++t) {
                TrialConfig c{pair, {}, n, Rational(2), derive_seed(6, n, k, t), kDefaultBudget, TrialMode::FullPipeline};
                TrialResult r = run_trial(c, true);
                if (!r.trace) continue;
                if (!r.grow_error.empty()) o.fail("grow aborted: " + r.grow_error);
                check_trace(*r.trace, pair, o, nondeg, deg);
                ++extra;
            }
    }
    if (main_traces == 0) o.fail("no stuck trials in the colorer run");
    o.detail = std::to_string(main_traces) + " traces from the colorer run (" + std::to_string(main_nondeg) +
               " non-degenerate, " + std::to_string(main_deg) + " degenerate steps), plus " + std::to_string(extra) +
               " dense strict-case traces (" + std::to_string(nondeg - main_nondeg) + " / " +
               std::to_string(deg - main_deg) + ")";
    return o;
}

// ---- 5 ----------------------------------------------------------------

Outcome oracle_agreement() {
    Outcome o;
    std::vector<PairSpec> pairs = {build_pair_spec(complete_graph(4), cycle_graph(4)),
                                   build_pair_spec(complete_graph(5), cycle_graph(4)),
                                   build_pair_spec(complete_graph(3), complete_graph(3))};
    std::ostringstream detail;
    int naive_checked = 0;
    for (const PairSpec& pair : pairs) {
        auto fam = enumerate_a_hat(pair, 7).graphs();
        int done = 0, valid = 0, invalid = 0, budget = 0, colored = 0;
        for (std::uint64_t k = 0; done < 200; ++k) {
            std::uint64_t s = derive_seed(5, k);
            int n = 5 + static_cast<int>(s % 4);
            double p = 0.3 + 0.65 * static_cast<double>((s >> 8) % 1000) / 1000.0;
            Graph g = sample_gnp(n, p, s);
            if (g.edge_count() > 18) continue;
            ++done;
            ColorerOutcome out = asym_edge_col(g, pair, fam, false);
            OracleResult r = has_valid_coloring(g, pair);
            bool col = out.status == ColorerStatus::Colored;
            colored += col;
            if (r.verdict == Verdict::Valid) ++valid;
            else if (r.verdict == Verdict::Invalid) ++invalid;
            else ++budget;
            if (col && r.verdict == Verdict::Invalid) o.fail(name_of(pair) + ": colored but invalid: " + describe(g));
            if (g.edge_count() <= 15) {
                bool naive = oracle::naive_has_valid_colouring(g, pair.h1, pair.h2);
                ++naive_checked;
                if (r.verdict != Verdict::BudgetExceeded && naive != (r.verdict == Verdict::Valid))
                    o.fail("search oracle disagrees with 2^e enumeration on " + describe(g));
                if (col && !naive) o.fail(name_of(pair) + ": colored but no valid colouring exists");
            }
        }
        detail << valid << "/" << invalid << "/" << budget << " valid/invalid/budget (" << colored << " colored); ";
    }
    PairSpec k3 = pairs[2];
    if (has_valid_coloring(complete_graph(6), k3).verdict != Verdict::Invalid) o.fail("K6 for (K3,K3) not invalid");
    if (has_valid_coloring(complete_graph(5), k3).verdict != Verdict::Valid) o.fail("K5 for (K3,K3) not valid");
    if (oracle::naive_has_valid_colouring(complete_graph(6), k3.h1, k3.h2)) o.fail("naive: K6 colourable");
    if (!oracle::naive_has_valid_colouring(complete_graph(5), k3.h1, k3.h2)) o.fail("naive: K5 not colourable");
    o.detail = detail.str() + std::to_string(naive_checked) + " cross-checked by full enumeration; K6 invalid, K5 valid";
    return o;
}

// ---- 7 ----------------------------------------------------------------

Outcome external_density_suite() {
    Outcome o;
    std::vector<PairSpec> pairs = {
        build_pair_spec(complete_graph(4), cycle_graph(4)), build_pair_spec(complete_graph(5), cycle_graph(4)),
        build_pair_spec(complete_graph(4), complete_graph(3)), build_pair_spec(cycle_graph(5), cycle_graph(6))};
    std::mt19937_64 rng(7);
    int clusters = 0, with_clusters = 0;
    for (const PairSpec& pair : pairs) {
        int done = 0;
        while (done < 200) {
            int n = 2 + static_cast<int>(rng() % 5);
            Graph base = oracle::random_graph(rng, n, 0.5);
            if (!base.has_edges()) continue;
            Edge anchor = base.edge(static_cast<int>(rng() % static_cast<unsigned>(base.edge_count())));
            FlowerAttachment j = random_flower(base, anchor, pair, rng, 0.35);
            if (j.classification != FlowerClass::HOnly) continue;
            ++done;
            FlowerAttachment s = star_counterpart(j);
            // sizes counted from the graphs themselves
            long ve = j.graph.vertex_count() - n, ee = j.graph.edge_count() - base.edge_count();
            long vs = s.graph.vertex_count() - n, es = s.graph.edge_count() - base.edge_count();
            if (!(Rational(ee, ve) > Rational(es, vs)))
                o.fail(name_of(pair) + ": e+/v+ not above the disjoint attachment on " + describe(j.graph));
            if (Rational(es, vs) != pair.m2_pair) o.fail(name_of(pair) + ": disjoint attachment density is not m2");
            EdgeOrder ord = order_edges(j);
            DeltaAccount acc = delta_accounting(j, ord);
            if (es - acc.sum_e != ee || vs - acc.sum_v != ve) o.fail(name_of(pair) + ": delta sums do not match sizes");
            std::vector<int> seen(j.inner_edges.size(), 0);
            for (int f : ord.stack) ++seen[static_cast<std::size_t>(f)];
            for (int c : seen)
                if (c != 1) o.fail(name_of(pair) + ": an inner edge is not ordered exactly once");
            std::set<int> used;
            for (const EdgeCluster& c : ord.clusters) {
                long se = 0, sv = 0;
                for (int f : c.edges) {
                    if (!used.insert(f).second) o.fail(name_of(pair) + ": clusters share an edge");
                    se += static_cast<long>(acc.per_edge[f].delta_e.size());
                    sv += static_cast<long>(acc.per_edge[f].delta_v.size());
                }
                if (!(Rational(se) < pair.m2_pair * Rational(sv))) o.fail(name_of(pair) + ": cluster delta bound fails");
            }
            for (int f : ord.fall_through)
                if (!acc.per_edge[f].delta_e.empty()) o.fail(name_of(pair) + ": fall-through edge with delta_e > 0");
            auto rep = verify_external_density(j, s, pair.m2_pair);
            if (!rep.ok) o.fail(name_of(pair) + ": " + rep.failure);
            clusters += static_cast<int>(ord.clusters.size());
            with_clusters += !ord.clusters.empty();
        }
    }
    o.detail = "800 overlapping attachments over 4 pairs, " + std::to_string(with_clusters) + " with clusters (" +
               std::to_string(clusters) + " clusters)";
    return o;
}

// ---- 8 ----------------------------------------------------------------

Outcome regular_pairs_suite() {
    Outcome o;
    if (g_poly(4, 5, 3) != 2) o.fail("g(4,5,3) != 2");
    for (int v = 3; v <= 20; ++v)
        for (int l = 2; l <= 20; ++l) {
            if (f_poly(3, v, 2, l) != v * (l - 2) - 6) o.fail("f(3,v2,2,l2) identity");
            if (f_poly(v, 4, l, 3) != 10 * v - 8 * (l + 2)) o.fail("f(v1,4,l1,3) identity");
        }
    int tuples = 0;
    for (int v1 = 3; v1 <= 12; ++v1)
        for (int l1 = 2; l1 <= v1 - 1; ++l1)
            for (int v2 = 3; v2 <= 12; ++v2)
                for (int l2 = 2; l2 <= v2 - 1; ++l2) {
                    ++tuples;
                    // m2 of the pair from its definition on H1 itself
                    Rational d2h2(v2 * l2 - 2, 2 * (v2 - 2));
                    Rational m2 = Rational(v1 * l1, 2) / (Rational(v1 - 2) + 1 / d2h2);
                    bool gap = Rational(l1 + l2 - 1, 2) > m2;
                    if (gap != (f_poly(v1, v2, l1, l2) > 0)) o.fail("gap iff f > 0 fails");
                    if (m2 != m2_pair_regular({v1, v2, l1, l2})) o.fail("closed form disagrees");
                }
    int cubic = 0, strict = 0;
    for (const Graph& g : oracle::all_graphs_up_to_iso(6)) {
        bool reg = true;
        for (int v = 0; v < 6; ++v) reg = reg && g.degree(v) == 3;
        if (!reg) continue;
        ++cubic;
        if (balancedness(g, Balance::strictly_two_balanced)) {
            ++strict;
            if (!oracle::naive_isomorphic(g, complete_bipartite(3, 3))) o.fail("a strictly 2-balanced cubic graph other than K3,3");
        }
    }
    if (cubic != 2 || strict != 1) o.fail("cubic graphs on 6 vertices: " + std::to_string(cubic) + ", strict " + std::to_string(strict));

    std::vector<std::pair<Graph, Graph>> concrete = {{complete_graph(5), complete_graph(4)},
                                                     {complete_graph(5), complete_bipartite(3, 3)},
                                                     {complete_graph(4), complete_bipartite(3, 3)},
                                                     {complete_bipartite(3, 3), cycle_graph(7)},
                                                     {complete_graph(3), cube()},
                                                     {petersen(), cycle_graph(11)}};
    int certified = 0;
    for (const auto& [h1, h2] : concrete) {
        CertResult c = certify_emptiness(h1, h2);
        if (!c.ok()) {
            o.fail("not certified: " + describe(h1) + " / " + describe(h2) + ": " + c.rejection->reason);
            continue;
        }
        ++certified;
        const auto& p = c.certificate->params;
        PairSpec pair = build_pair_spec(h1, h2, c.certificate->epsilon_star);
        AHatEnumeration e = enumerate_a_hat(pair, 2 * (p.v1 + p.v2));
        if (!e.members.empty()) o.fail("A-hat non-empty for a certified pair");
        if (std::max(h1.vertex_count(), h2.vertex_count()) <= 8) {
            AHatEnumeration s = enumerate_a_hat(pair, std::max({h1.vertex_count(), h2.vertex_count(), 7}), false);
            if (!s.members.empty()) o.fail("unpruned search found an A-hat member for a certified pair");
        }
    }
    o.detail = std::to_string(tuples) + " tuples for the equivalence, 2 cubic graphs on 6 vertices, " +
               std::to_string(certified) + " concrete certified pairs with empty A-hat up to 2(v1+v2)";
    return o;
}

// ---- 9 ----------------------------------------------------------------

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism(const char* cli) {
    Outcome o;
    SweepConfig c{build_pair_spec(complete_graph(3), complete_graph(3)), enumerate_a_hat(build_pair_spec(complete_graph(3), complete_graph(3)), 7).graphs(),
                  {10, 16}, {Rational(1, 2), Rational(1), Rational(2)}, 20, 77, kDefaultBudget, TrialMode::ColorPlusOracle};
    std::string a = sweep_csv(sweep(c), false), b = sweep_csv(sweep(c), false);
    if (a != b) o.fail("library sweep CSV differs between runs");
    std::string detail = "library sweep rerun identical";
    if (cli && std::filesystem::exists(cli)) {
        auto dir = std::filesystem::temp_directory_path() / ("asr_det_" + std::to_string(std::random_device{}()));
        std::string runs[2];
        for (int k = 0; k < 2; ++k) {
            auto out = dir / std::to_string(k);
            std::string cmd = std::string(cli) + " --seed 31 --out " + out.string() +
                              " sweep --pair-h1 K4 --pair-h2 C4 --n 12,20 --b 1/2,1,2 --trials 25 --mode full-pipeline";
            if (std::system(cmd.c_str()) != 0) o.fail("CLI sweep failed");
            runs[k] = read_file(out / "sweep.csv");
        }
        std::filesystem::remove_all(dir);
        if (runs[0].empty() || runs[0] != runs[1]) o.fail("CLI sweep CSV differs between runs");
        detail += ", CLI sweep rerun byte-identical";
    }
    o.detail = detail;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    bool all = true;
    auto report = [&](int id, const std::string& title, double limit_s, const std::function<Outcome()>& run) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = run();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit_s > 0 && s > limit_s) o.fail("runtime " + std::to_string(s) + " s over the limit");
        all = all && o.pass;
        std::printf("criterion %d %s: %s [%.1f s] %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), s, o.detail.c_str());
        for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
    };
    ColorerRun colorer;
    report(1, "density golden table", 1, density_golden);
    report(2, "density sandwich over all pairs on <= 6 vertices", 300, sandwich_suite);
    report(3, "strict balancedness implies 2-connectivity", 0, two_connectivity_suite);
    report(4, "colorer soundness on G(n,p)", 900, [&] {
        colorer_soundness(colorer);
        return colorer.outcome;
    });
    report(5, "colorer never contradicts the exhaustive oracle", 600, oracle_agreement);
    report(6, "lambda claims on grow traces", 0, [&] { return lambda_claims(colorer); });
    report(7, "overlapping flower attachments are externally denser", 0, external_density_suite);
    report(8, "regular-pair computations", 600, regular_pairs_suite);
    report(9, "sweep determinism", 0, [&] { return determinism(cli); });
    return all ? 0 : 1;
}
