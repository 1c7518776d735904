#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "asr/colorer.hpp"
#include "asr/graph.hpp"
#include "asr/pair_spec.hpp"
#include "asr/rational.hpp"

namespace asr {

enum class GrowVariant { Grow, GrowAlt };
enum class StepKind { SpecialCase1, SpecialCase2, AttachR, ExtendL, ExtendAlt };
enum class GrowOutcome { ReturnedFi, ReturnedMinimisingSubgraph, SpecialReturn };
enum class Degeneracy { NonDegenerate, Type1, Type2, Alt };

// One while-loop iteration (or a special-case return). Vertex and edge ids
// refer to the host graph.
struct GrowStep {
    int i = 0;
    StepKind kind = StepKind::ExtendL;
    bool degenerate = false;
    Rational lambda_before;
    Rational lambda_after;
    int added_vertices = 0;
    int added_edges = 0;
    int anchor_edge = -1;            // e from the eligible-edge call
    Subgraph attached;               // L, or the R of AttachR / EXTEND
    bool attached_l = false;         // attached is an H2-copy
    int attached_overlap = 0;        // |V(F_i) ∩ V(attached)|
    std::vector<Subgraph> pendants;  // R_{e'} in attachment order
    std::vector<int> pendant_overlaps;  // |V(F') ∩ V(R_{e'})| when attached
};

struct GrowTrace {
    GrowVariant variant = GrowVariant::Grow;
    std::vector<GrowStep> steps;
    GrowOutcome outcome = GrowOutcome::SpecialReturn;
    Subgraph final_sub;  // host ids
    Graph final;         // compacted
    int seed_edge = -1;
    Subgraph seed;       // F_0
    Rational lambda_seed;
    Rational min_lambda;  // over subgraphs of the last F_i
    int iteration_cap = 0;

    int degenerate_count() const;
    // smallest lambda_before - lambda_after over degenerate steps, if any
    std::optional<Rational> min_degenerate_drop() const;
};

// A selection the correctness argument says cannot fail did fail; carries
// the trace so far.
class GrowAborted : public std::runtime_error {
public:
    GrowAborted(const std::string& what, GrowTrace trace) : std::runtime_error(what), trace_(std::move(trace)) {}
    const GrowTrace& trace() const { return trace_; }

private:
    GrowTrace trace_;
};

// Grow: an edge on no member of L*_F. GrowAlt: an edge that is no unique
// (L,R) edge intersection within F. Among eligible edges the one whose
// canonical image is least is returned, as an edge id of f.
std::optional<int> eligible_edge(const Graph& f, const PairSpec& pair, GrowVariant variant);

// The largest subgraph minimising lambda; it is unique (minimisers are closed
// under union), hence determined up to isomorphism. Vertex ids of f.
Subgraph minimising_subgraph(const Graph& f, const PairSpec& pair);
Rational min_lambda(const Graph& f, const PairSpec& pair);

struct ExtendResult {
    Subgraph f;
    GrowStep step;
};

// EXTEND-L: F ∪ L ∪ R_{e'} for e' ∈ E(L)∖E(F), L the first L* copy of the
// host through e and R_{e'} the first H1-copy meeting L exactly in e'. f and
// the result are host subgraphs. Throws GrowAborted when no L or R_{e'} exists.
ExtendResult extend_l(const Subgraph& f, int e, const Graph& host, const PairSpec& pair);
// EXTEND: the first (L,R) pair meeting exactly in e; attach L unless L ⊆ F.
ExtendResult extend_alt(const Subgraph& f, int e, const Graph& host, const PairSpec& pair);

Degeneracy classify_iteration(const GrowStep& step);

// GROW (Strict pairs) and GROW-ALT (Equal pairs). The loop
// runs while i < ln(n) and every subgraph has lambda > -gamma, n being the
// host's vertex count.
GrowTrace grow(const Graph& host, const PairSpec& pair, const std::vector<Graph>& a_hat);
GrowTrace grow_alt(const Graph& host, const PairSpec& pair, const std::vector<Graph>& a_hat);
// the variant matching the pair's case
GrowTrace grow_for(const Graph& host, const PairSpec& pair, const std::vector<Graph>& a_hat);

struct GrowAudit {
    bool ok = true;
    std::vector<std::string> violations;
};

// Trace invariants: lambda kept on non-degenerate steps, strictly lower on
// degenerate ones, at least one edge per step, lambda(F_0) = 2 - 1/m2(H2),
// recorded degeneracy matching classify_iteration, lambda values matching
// the recorded sizes.
GrowAudit audit_trace(const GrowTrace& trace, const PairSpec& pair);

std::string to_string(GrowVariant v);
std::string to_string(StepKind k);
std::string to_string(GrowOutcome o);
std::string to_string(Degeneracy d);

// ---- flower attachments -------------------------------------------------

enum class FlowerClass { HStar, HOnly };

// J ∈ H(F, ê, H1, H2): F on vertices [0, v(F)), a copy of H2 through ê and a
// copy H_f of H1 on every other edge f of it.
struct FlowerAttachment {
    Graph base;
    Edge anchor;
    Graph h1, h2;
    std::vector<int> inner_map;                 // H2 vertex -> vertex of J
    std::vector<Edge> inner_edges;              // E_J
    std::vector<std::vector<int>> pendant_maps;  // per inner edge: H1 vertex -> vertex of J
    Graph graph;                                // J
    FlowerClass classification = FlowerClass::HStar;

    std::vector<int> inner_vertices() const;   // V(H_ê), i.e. V_J ∪ ê
    std::vector<int> outer_vertices(int f) const;  // U_J(f)
    std::vector<Edge> outer_edges(int f) const;    // D_J(f), sorted
    int v_plus() const { return graph.vertex_count() - base.vertex_count(); }
    int e_plus() const { return graph.edge_count() - base.edge_count(); }
};

// Builds J from the maps, checking the H conditions. Throws
// std::invalid_argument naming the violated condition.
FlowerAttachment make_flower(const Graph& base, Edge anchor, const Graph& h1, const Graph& h2,
                             std::vector<int> inner_map, std::vector<std::vector<int>> pendant_maps);

// Random member of H(F, ê, H1, H2): each non-anchor vertex of each pendant
// is identified with a random allowed vertex with probability overlap, else
// fresh. Retries until the H conditions hold.
FlowerAttachment random_flower(const Graph& base, Edge anchor, const PairSpec& pair, std::mt19937_64& rng,
                               double overlap);

// The member of H* with the same anchor edges and orientations as j.
FlowerAttachment star_counterpart(const FlowerAttachment& j);

struct EdgeCluster {
    std::vector<int> edges;     // indices into inner_edges, in push order
    std::vector<int> vertices;  // V_i
};

struct EdgeOrder {
    std::vector<int> stack;  // indices into inner_edges, bottom first
    std::vector<EdgeCluster> clusters;
    std::vector<int> fall_through;  // pushed by the final branch
};

// ORDER-EDGES. Choices go to the lowest inner-edge index.
EdgeOrder order_edges(const FlowerAttachment& j);

struct DeltaEntry {
    std::vector<Edge> delta_e;  // Δ_E(f)
    std::vector<int> delta_v;   // Δ_V(f)
    std::vector<int> t_prime_vertices;  // V(T'(f))
};

struct DeltaAccount {
    std::vector<DeltaEntry> per_edge;  // by inner-edge index
    int sum_e = 0;
    int sum_v = 0;
};

DeltaAccount delta_accounting(const FlowerAttachment& j, const EdgeOrder& order);

struct ExternalDensityReport {
    bool ok = false;
    std::string failure;
    Rational density_j;     // e+(J)/v+(J)
    Rational density_star;  // e+(J*)/v+(J*)
    Rational closed_form;   // e1(e2-1)/((v1-2)(e2-1)+v2-2)
    int clusters = 0;
};

// Checks e+(J)/v+(J) > e+(J*)/v+(J*), the closed form for J*, the Δ sums,
// and the ORDER-EDGES properties (edge-disjoint clusters, every inner edge
// once, Δ_e = 0 on fall-through edges, per cluster ΣΔ_e < m2·ΣΔ_v, at most
// ⌊e2/2⌋ clusters). m2 is m2(H1,H2).
ExternalDensityReport verify_external_density(const FlowerAttachment& j, const FlowerAttachment& jstar, const Rational& m2);

// A J ∈ H(F, ê, C5, C6) ∖ H*: F is ê with three pendant edges at each end,
// H_ê a C6, pendants on consecutive inner edges share an outer edge or
// outer vertices, and one pendant reaches back to an end of ê.
FlowerAttachment overlap_example();

}  // namespace asr
