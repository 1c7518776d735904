#include "asr/grow.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>
#include <sstream>

#include "asr/a_hat.hpp"
#include "asr/canonical.hpp"
#include "asr/density.hpp"
#include "asr/families.hpp"

namespace asr {

namespace {

Rational lam(const Subgraph& s, const PairSpec& pair) {
    return lambda(static_cast<int>(s.vertices.size()), static_cast<int>(s.edges.size()), pair.m2_pair);
}

int common_count(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return static_cast<int>(out.size());
}

Subgraph lift(const Graph& host, const Subgraph& f, const Graph& fg, const Subgraph& local) {
    Subgraph out;
    for (int v : local.vertices) out.vertices.push_back(f.vertices[v]);
    for (int e : local.edges) {
        const Edge& le = fg.edge(e);
        out.edges.push_back(host.edge_id(f.vertices[le.u], f.vertices[le.v]));
    }
    out.vertices = sorted_unique(std::move(out.vertices));
    out.edges = sorted_unique(std::move(out.edges));
    return out;
}

}  // namespace

int GrowTrace::degenerate_count() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const GrowStep& s) { return s.degenerate; }));
}

std::optional<Rational> GrowTrace::min_degenerate_drop() const {
    std::optional<Rational> best;
    for (const GrowStep& s : steps) {
        if (!s.degenerate) continue;
        Rational d = s.lambda_before - s.lambda_after;
        if (!best || d < *best) best = d;
    }
    return best;
}

std::optional<int> eligible_edge(const Graph& f, const PairSpec& pair, GrowVariant variant) {
    CopyIndex idx = build_copy_index(f, pair);
    Membership mem = variant == GrowVariant::Grow ? in_Cstar(f, idx) : in_C(f, idx);
    if (mem.failing_edges.empty()) return std::nullopt;
    CanonicalForm cf = canonical_form(f);
    std::optional<int> best;
    Edge best_key;
    for (int e : mem.failing_edges) {
        Edge key = make_edge(cf.labeling[f.edge(e).u], cf.labeling[f.edge(e).v]);
        if (!best || key < best_key) {
            best = e;
            best_key = key;
        }
    }
    return best;
}

Subgraph minimising_subgraph(const Graph& f, const PairSpec& pair) {
    Subgraph out;
    if (!f.has_edges()) return out;
    ClosureResult cr = max_excess_subgraph(f, pair.m2_pair);
    out.vertices = cr.max_set;
    std::vector<char> in(static_cast<std::size_t>(f.vertex_count()), 0);
    for (int v : out.vertices) in[v] = 1;
    for (int e = 0; e < f.edge_count(); ++e)
        if (in[f.edge(e).u] && in[f.edge(e).v]) out.edges.push_back(e);
    return out;
}

Rational min_lambda(const Graph& f, const PairSpec& pair) {
    if (!f.has_edges()) return Rational(0);
    return -max_excess_subgraph(f, pair.m2_pair).value / pair.m2_pair;
}

namespace {

// Host copies and the L* list, shared by every step of a run.
struct HostContext {
    const Graph& host;
    const PairSpec& pair;
    CopyIndex idx;
    std::vector<char> lstar;

    HostContext(const Graph& h, const PairSpec& p) : host(h), pair(p), idx(build_copy_index(h, p)) {
        lstar.assign(idx.l.size(), 0);
        for (int li : lstar_ids(idx)) lstar[li] = 1;
    }
};

ExtendResult extend_l_in(const Subgraph& f, int e, const HostContext& ctx, GrowTrace* partial) {
    auto abort = [&](const std::string& what) -> ExtendResult {
        throw GrowAborted(what, partial ? *partial : GrowTrace{});
    };
    int li = -1;
    for (int cand : ctx.idx.l_by_edge[e])
        if (ctx.lstar[cand]) {
            li = cand;
            break;
        }
    if (li < 0) return abort("EXTEND-L: no L* copy of the host contains edge " + std::to_string(e));
    const Subgraph& l = ctx.idx.l.copies[li];
    ExtendResult out;
    out.step.kind = StepKind::ExtendL;
    out.step.anchor_edge = e;
    out.step.attached = l;
    out.step.attached_l = true;
    out.step.attached_overlap = common_count(f.vertices, l.vertices);
    Subgraph cur = subgraph_union(f, l);
    for (std::size_t k = 0; k < l.edges.size(); ++k) {
        if (std::binary_search(f.edges.begin(), f.edges.end(), l.edges[k])) continue;
        const auto& rs = ctx.idx.unique_r[li][k];
        if (rs.empty()) return abort("EXTEND-L: no H1-copy meets L exactly in edge " + std::to_string(l.edges[k]));
        const Subgraph& r = ctx.idx.r.copies[rs.front()];
        out.step.pendants.push_back(r);
        out.step.pendant_overlaps.push_back(common_count(cur.vertices, r.vertices));
        cur = subgraph_union(cur, r);
    }
    out.f = std::move(cur);
    return out;
}

ExtendResult extend_alt_in(const Subgraph& f, int e, const HostContext& ctx, GrowTrace* partial) {
    for (int li : ctx.idx.l_by_edge[e]) {
        const Subgraph& l = ctx.idx.l.copies[li];
        auto k = static_cast<std::size_t>(std::lower_bound(l.edges.begin(), l.edges.end(), e) - l.edges.begin());
        const auto& rs = ctx.idx.unique_r[li][k];
        if (rs.empty()) continue;
        const Subgraph& r = ctx.idx.r.copies[rs.front()];
        const bool use_l = !is_subset(l.edges, f.edges);
        const Subgraph& piece = use_l ? l : r;
        ExtendResult out;
        out.step.attached_l = use_l;
        out.step.kind = StepKind::ExtendAlt;
        out.step.anchor_edge = e;
        out.step.attached = piece;
        out.step.attached_overlap = common_count(f.vertices, piece.vertices);
        out.f = subgraph_union(f, piece);
        return out;
    }
    throw GrowAborted("EXTEND: no (L,R) pair meets exactly in edge " + std::to_string(e),
                      partial ? *partial : GrowTrace{});
}

void finish_step(GrowStep& step, const Subgraph& before, const Subgraph& after, const PairSpec& pair) {
    step.lambda_before = lam(before, pair);
    step.lambda_after = lam(after, pair);
    step.added_vertices = static_cast<int>(after.vertices.size() - before.vertices.size());
    step.added_edges = static_cast<int>(after.edges.size() - before.edges.size());
    step.degenerate = classify_iteration(step) != Degeneracy::NonDegenerate;
}

void set_final(GrowTrace& t, const Graph& host, Subgraph s) {
    t.final_sub = std::move(s);
    t.final = to_graph(host, t.final_sub);
}

GrowTrace run_grow(const Graph& host, const PairSpec& pair, const std::vector<Graph>& a_hat, GrowVariant variant) {
    GrowTrace t;
    t.variant = variant;
    if (!host.has_edges()) throw GrowAborted("host has no edges", t);
    SgDecomposition dec = sg_decompose(host, pair, a_hat);
    const auto& cnt = dec.per_edge_count;

    if (std::all_of(cnt.begin(), cnt.end(), [](int c) { return c == 1; })) {
        if (dec.nontrivial.empty()) throw GrowAborted("host is a sparse A-hat-graph", t);
        Subgraph u;
        for (int e : dec.nontrivial.front().edges) u = subgraph_union(u, dec.members[dec.edge_members[e].front()]);
        GrowStep s;
        s.kind = StepKind::SpecialCase1;
        s.attached = dec.nontrivial.front();
        s.lambda_before = s.lambda_after = lam(u, pair);
        s.added_vertices = static_cast<int>(u.vertices.size());
        s.added_edges = static_cast<int>(u.edges.size());
        t.steps.push_back(s);
        t.outcome = GrowOutcome::SpecialReturn;
        set_final(t, host, std::move(u));
        return t;
    }
    for (int e = 0; e < host.edge_count(); ++e) {
        if (cnt[e] < 2) continue;
        const auto& ids = dec.edge_members[e];
        Subgraph u = subgraph_union(dec.members[ids[0]], dec.members[ids[1]]);
        GrowStep s;
        s.kind = StepKind::SpecialCase2;
        s.anchor_edge = e;
        s.lambda_before = s.lambda_after = lam(u, pair);
        s.added_vertices = static_cast<int>(u.vertices.size());
        s.added_edges = static_cast<int>(u.edges.size());
        t.steps.push_back(s);
        t.outcome = GrowOutcome::SpecialReturn;
        set_final(t, host, std::move(u));
        return t;
    }

    HostContext ctx(host, pair);
    int seed_edge = static_cast<int>(std::find(cnt.begin(), cnt.end(), 0) - cnt.begin());
    if (ctx.idx.r_by_edge[seed_edge].empty())
        throw GrowAborted("no H1-copy through seed edge " + std::to_string(seed_edge), t);
    Subgraph f = ctx.idx.r.copies[ctx.idx.r_by_edge[seed_edge].front()];
    t.seed_edge = seed_edge;
    t.seed = f;
    t.lambda_seed = lam(f, pair);
    t.iteration_cap = static_cast<int>(std::ceil(std::log(static_cast<double>(host.vertex_count()))));

    const Rational neg_gamma = -pair.gamma;
    Graph fg = to_graph(host, f);
    Rational ml = min_lambda(fg, pair);
    int i = 0;
    while (i < t.iteration_cap && ml > neg_gamma) {
        ExtendResult ext;
        bool attached_r = false;
        if (variant == GrowVariant::Grow) {
            for (std::size_t ri = 0; ri < ctx.idx.r.size(); ++ri) {
                const Subgraph& r = ctx.idx.r.copies[ri];
                if (is_subset(r.edges, f.edges)) continue;
                int ov = common_count(r.vertices, f.vertices);
                if (ov < 2) continue;
                ext.step.kind = StepKind::AttachR;
                ext.step.attached = r;
                ext.step.attached_overlap = ov;
                ext.f = subgraph_union(f, r);
                attached_r = true;
                break;
            }
        }
        if (!attached_r) {
            std::optional<int> local = eligible_edge(fg, pair, variant);
            if (!local)
                throw GrowAborted(std::string("no eligible edge: F_") + std::to_string(i) + " is in " +
                                      (variant == GrowVariant::Grow ? "C*" : "C"),
                                  t);
            const Edge& le = fg.edge(*local);
            int e = host.edge_id(f.vertices[le.u], f.vertices[le.v]);
            ext = variant == GrowVariant::Grow ? extend_l_in(f, e, ctx, &t) : extend_alt_in(f, e, ctx, &t);
        }
        ext.step.i = i;
        finish_step(ext.step, f, ext.f, pair);
        t.steps.push_back(std::move(ext.step));
        f = std::move(ext.f);
        fg = to_graph(host, f);
        ml = min_lambda(fg, pair);
        ++i;
    }
    t.min_lambda = ml;
    if (i >= t.iteration_cap) {
        t.outcome = GrowOutcome::ReturnedFi;
        set_final(t, host, f);
    } else {
        t.outcome = GrowOutcome::ReturnedMinimisingSubgraph;
        set_final(t, host, lift(host, f, fg, minimising_subgraph(fg, pair)));
    }
    return t;
}

}  // namespace

ExtendResult extend_l(const Subgraph& f, int e, const Graph& host, const PairSpec& pair) {
    HostContext ctx(host, pair);
    ExtendResult r = extend_l_in(f, e, ctx, nullptr);
    finish_step(r.step, f, r.f, pair);
    return r;
}

ExtendResult extend_alt(const Subgraph& f, int e, const Graph& host, const PairSpec& pair) {
    HostContext ctx(host, pair);
    ExtendResult r = extend_alt_in(f, e, ctx, nullptr);
    finish_step(r.step, f, r.f, pair);
    return r;
}

Degeneracy classify_iteration(const GrowStep& step) {
    switch (step.kind) {
        case StepKind::AttachR: return Degeneracy::Type1;
        case StepKind::ExtendL:
            if (step.attached_overlap != 2) return Degeneracy::Type2;
            for (int ov : step.pendant_overlaps)
                if (ov != 2) return Degeneracy::Type2;
            return Degeneracy::NonDegenerate;
        case StepKind::ExtendAlt: return step.attached_overlap == 2 ? Degeneracy::NonDegenerate : Degeneracy::Alt;
        case StepKind::SpecialCase1:
        case StepKind::SpecialCase2: return Degeneracy::NonDegenerate;
    }
    return Degeneracy::NonDegenerate;
}

GrowTrace grow(const Graph& host, const PairSpec& pair, const std::vector<Graph>& a_hat) {
    return run_grow(host, pair, a_hat, GrowVariant::Grow);
}

GrowTrace grow_alt(const Graph& host, const PairSpec& pair, const std::vector<Graph>& a_hat) {
    return run_grow(host, pair, a_hat, GrowVariant::GrowAlt);
}

GrowTrace grow_for(const Graph& host, const PairSpec& pair, const std::vector<Graph>& a_hat) {
    return pair.pair_case == PairCase::Strict ? grow(host, pair, a_hat) : grow_alt(host, pair, a_hat);
}

GrowAudit audit_trace(const GrowTrace& t, const PairSpec& pair) {
    GrowAudit a;
    auto bad = [&](const std::string& s) {
        a.ok = false;
        a.violations.push_back(s);
    };
    const int v1 = pair.h1.vertex_count(), e1 = pair.h1.edge_count();
    const int v2 = pair.h2.vertex_count(), e2 = pair.h2.edge_count();
    if (t.seed_edge >= 0 && t.lambda_seed != Rational(2) - Rational(1) / pair.m2_h2)
        bad("lambda(F_0) = " + to_string(t.lambda_seed) + ", expected 2 - 1/m2(H2)");
    for (const GrowStep& s : t.steps) {
        if (s.kind == StepKind::SpecialCase1 || s.kind == StepKind::SpecialCase2) continue;
        std::string at = "step " + std::to_string(s.i) + " (" + to_string(s.kind) + "): ";
        Degeneracy d = classify_iteration(s);
        if (s.degenerate != (d != Degeneracy::NonDegenerate)) bad(at + "recorded degeneracy disagrees with classification");
        if (s.added_edges < 1) bad(at + "no edge added");
        Rational diff = Rational(s.added_vertices) - Rational(s.added_edges) / pair.m2_pair;
        if (s.lambda_after - s.lambda_before != diff) bad(at + "lambda change does not match added counts");
        if (s.degenerate) {
            if (!(s.lambda_after < s.lambda_before))
                bad(at + "degenerate step with lambda " + to_string(s.lambda_before) + " -> " + to_string(s.lambda_after));
            continue;
        }
        if (s.lambda_after != s.lambda_before)
            bad(at + "non-degenerate step with lambda " + to_string(s.lambda_before) + " -> " + to_string(s.lambda_after));
        int want_v = v1 - 2, want_e = e1 - 1;
        if (s.kind == StepKind::ExtendL) {
            want_v = (v2 - 2) + (e2 - 1) * (v1 - 2);
            want_e = (e2 - 1) + (e2 - 1) * (e1 - 1);
        } else if (s.attached_l) {
            want_v = v2 - 2;
            want_e = e2 - 1;
        }
        if (s.added_vertices != want_v || s.added_edges != want_e)
            bad(at + "non-degenerate step added " + std::to_string(s.added_vertices) + " vertices and " +
                std::to_string(s.added_edges) + " edges");
    }
    return a;
}

std::string to_string(GrowVariant v) { return v == GrowVariant::Grow ? "grow" : "grow-alt"; }

std::string to_string(StepKind k) {
    switch (k) {
        case StepKind::SpecialCase1: return "special_case_1";
        case StepKind::SpecialCase2: return "special_case_2";
        case StepKind::AttachR: return "attach_r";
        case StepKind::ExtendL: return "extend_l";
        case StepKind::ExtendAlt: return "extend_alt";
    }
    return "?";
}

std::string to_string(GrowOutcome o) {
    switch (o) {
        case GrowOutcome::ReturnedFi: return "returned_fi";
        case GrowOutcome::ReturnedMinimisingSubgraph: return "returned_minimising_subgraph";
        case GrowOutcome::SpecialReturn: return "special_return";
    }
    return "?";
}

std::string to_string(Degeneracy d) {
    switch (d) {
        case Degeneracy::NonDegenerate: return "non_degenerate";
        case Degeneracy::Type1: return "type_1";
        case Degeneracy::Type2: return "type_2";
        case Degeneracy::Alt: return "alt";
    }
    return "?";
}

// ---- flower attachments -------------------------------------------------

std::vector<int> FlowerAttachment::inner_vertices() const { return sorted_unique(inner_map); }

std::vector<int> FlowerAttachment::outer_vertices(int f) const {
    const Edge& fe = inner_edges[f];
    std::vector<int> out;
    for (int x : pendant_maps[f])
        if (x != fe.u && x != fe.v) out.push_back(x);
    return sorted_unique(std::move(out));
}

std::vector<Edge> FlowerAttachment::outer_edges(int f) const {
    std::vector<Edge> out;
    for (const Edge& e : h1.edges()) {
        Edge img = make_edge(pendant_maps[f][e.u], pendant_maps[f][e.v]);
        if (img != inner_edges[f]) out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool injective(const std::vector<int>& m) {
    std::vector<int> s = m;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

template <class T>
bool meets(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return !out.empty();
}

}  // namespace

FlowerAttachment make_flower(const Graph& base, Edge anchor, const Graph& h1, const Graph& h2,
                             std::vector<int> inner_map, std::vector<std::vector<int>> pendant_maps) {
    auto reject = [](const std::string& why) { throw std::invalid_argument("not a flower attachment: " + why); };
    anchor = make_edge(anchor.u, anchor.v);
    const int nf = base.vertex_count();
    if (!base.has_edge(anchor.u, anchor.v)) reject("anchor is not an edge of F");
    if (static_cast<int>(inner_map.size()) != h2.vertex_count() || !injective(inner_map))
        reject("H2 map is not injective");
    FlowerAttachment j;
    j.base = base;
    j.anchor = anchor;
    j.h1 = h1;
    j.h2 = h2;
    int anchor_hits = 0;
    for (int x : inner_map) {
        if (x < 0) reject("negative vertex");
        if (x < nf && x != anchor.u && x != anchor.v) reject("V(H_ê) ∩ V(F) is not ê");
        if (x == anchor.u || x == anchor.v) ++anchor_hits;
    }
    if (anchor_hits != 2) reject("V(H_ê) ∩ V(F) is not ê");
    std::vector<Edge> inner_all;
    for (const Edge& e : h2.edges()) inner_all.push_back(make_edge(inner_map[e.u], inner_map[e.v]));
    std::sort(inner_all.begin(), inner_all.end());
    if (!std::binary_search(inner_all.begin(), inner_all.end(), anchor)) reject("E(H_ê) ∩ E(F) is not {ê}");
    for (const Edge& e : inner_all)
        if (e != anchor) j.inner_edges.push_back(e);
    if (pendant_maps.size() != j.inner_edges.size()) reject("need one H1 map per inner edge");

    std::vector<Edge> all = base.edges();
    all.insert(all.end(), inner_all.begin(), inner_all.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    const std::vector<Edge> f_and_inner = all;
    int top = nf - 1;
    for (int x : inner_map) top = std::max(top, x);
    for (std::size_t k = 0; k < pendant_maps.size(); ++k) {
        const auto& pm = pendant_maps[k];
        const Edge& f = j.inner_edges[k];
        if (static_cast<int>(pm.size()) != h1.vertex_count() || !injective(pm)) reject("H1 map is not injective");
        bool has_f = false;
        for (const Edge& e : h1.edges()) {
            Edge img = make_edge(pm[e.u], pm[e.v]);
            if (img == f) {
                has_f = true;
                continue;
            }
            if (std::binary_search(f_and_inner.begin(), f_and_inner.end(), img))
                reject("E(F ∪ H_ê) ∩ E(H_f) is not {f}");
            all.push_back(img);
        }
        if (!has_f) reject("H_f does not contain f");
        for (int x : pm) {
            if (x < 0) reject("negative vertex");
            if (x < nf && x != anchor.u && x != anchor.v) reject("H_f meets V(F) outside ê");
            top = std::max(top, x);
        }
    }
    std::vector<char> used(static_cast<std::size_t>(top + 1), 0);
    for (int v = 0; v < nf; ++v) used[v] = 1;
    for (int x : inner_map) used[x] = 1;
    for (const auto& pm : pendant_maps)
        for (int x : pm) used[x] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end()) reject("vertex ids are not contiguous");
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    j.inner_map = std::move(inner_map);
    j.pendant_maps = std::move(pendant_maps);
    j.graph = Graph(top + 1, std::move(all));

    bool star = true;
    const std::vector<int> inner_v = j.inner_vertices();
    const int k = static_cast<int>(j.inner_edges.size());
    for (int a = 0; a < k && star; ++a) {
        auto ua = j.outer_vertices(a);
        if (meets(ua, inner_v)) star = false;
        for (int b = a + 1; b < k && star; ++b)
            if (meets(ua, j.outer_vertices(b)) || meets(j.outer_edges(a), j.outer_edges(b))) star = false;
    }
    j.classification = star ? FlowerClass::HStar : FlowerClass::HOnly;
    return j;
}

namespace {

// the pattern edge mapped onto target (oriented as in the map)
std::pair<int, int> anchor_of(const std::vector<int>& map, const Edge& target) {
    int a = -1, b = -1;
    for (std::size_t x = 0; x < map.size(); ++x) {
        if (map[x] == target.u) a = static_cast<int>(x);
        if (map[x] == target.v) b = static_cast<int>(x);
    }
    return {a, b};
}

}  // namespace

FlowerAttachment random_flower(const Graph& base, Edge anchor, const PairSpec& pair, std::mt19937_64& rng,
                               double overlap) {
    const Graph& h1 = pair.h1;
    const Graph& h2 = pair.h2;
    const int nf = base.vertex_count();
    std::bernoulli_distribution identify(overlap);
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const Edge& he = h2.edge(pick(h2.edge_count()));
        bool flip = pick(2) == 1;
        std::vector<int> inner(static_cast<std::size_t>(h2.vertex_count()), -1);
        inner[he.u] = flip ? anchor.v : anchor.u;
        inner[he.v] = flip ? anchor.u : anchor.v;
        int next = nf;
        for (int& x : inner)
            if (x < 0) x = next++;
        std::vector<Edge> inner_edges;
        for (const Edge& e : h2.edges()) {
            Edge img = make_edge(inner[e.u], inner[e.v]);
            if (img != make_edge(anchor.u, anchor.v)) inner_edges.push_back(img);
        }
        std::sort(inner_edges.begin(), inner_edges.end());
        std::vector<std::vector<int>> pendants;
        for (const Edge& f : inner_edges) {
            const Edge& pe = h1.edge(pick(h1.edge_count()));
            bool fl = pick(2) == 1;
            std::vector<int> pm(static_cast<std::size_t>(h1.vertex_count()), -1);
            pm[pe.u] = fl ? f.v : f.u;
            pm[pe.v] = fl ? f.u : f.v;
            for (int& x : pm) {
                if (x >= 0) continue;
                if (identify(rng)) {
                    std::vector<int> pool = {anchor.u, anchor.v};
                    for (int y = nf; y < next; ++y) pool.push_back(y);
                    pool.erase(std::remove_if(pool.begin(), pool.end(),
                                              [&](int y) { return std::find(pm.begin(), pm.end(), y) != pm.end(); }),
                               pool.end());
                    if (!pool.empty()) {
                        x = pool[static_cast<std::size_t>(pick(static_cast<int>(pool.size())))];
                        continue;
                    }
                }
                x = next++;
            }
            pendants.push_back(std::move(pm));
        }
        try {
            return make_flower(base, anchor, h1, h2, std::move(inner), std::move(pendants));
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random_flower: no valid attachment found");
}

FlowerAttachment star_counterpart(const FlowerAttachment& j) {
    const int nf = j.base.vertex_count();
    std::vector<int> inner(j.inner_map.size());
    std::vector<int> relabel(static_cast<std::size_t>(j.graph.vertex_count()), -1);
    relabel[j.anchor.u] = j.anchor.u;
    relabel[j.anchor.v] = j.anchor.v;
    int next = nf;
    for (std::size_t x = 0; x < inner.size(); ++x) {
        int old = j.inner_map[x];
        if (relabel[old] < 0) relabel[old] = next++;
        inner[x] = relabel[old];
    }
    std::vector<std::vector<int>> pendants;
    for (std::size_t k = 0; k < j.inner_edges.size(); ++k) {
        auto [a, b] = anchor_of(j.pendant_maps[k], j.inner_edges[k]);
        std::vector<int> pm(j.pendant_maps[k].size());
        for (std::size_t x = 0; x < pm.size(); ++x)
            pm[x] = (static_cast<int>(x) == a || static_cast<int>(x) == b) ? relabel[j.pendant_maps[k][x]] : next++;
        pendants.push_back(std::move(pm));
    }
    return make_flower(j.base, j.anchor, j.h1, j.h2, std::move(inner), std::move(pendants));
}

EdgeOrder order_edges(const FlowerAttachment& j) {
    const int k = static_cast<int>(j.inner_edges.size());
    const std::vector<int> inner_v = j.inner_vertices();
    std::vector<std::vector<Edge>> d(static_cast<std::size_t>(k));
    std::vector<std::vector<int>> near(static_cast<std::size_t>(k));  // f ∪ (U_J(f) ∩ V(H_ê^-))
    for (int f = 0; f < k; ++f) {
        d[f] = j.outer_edges(f);
        auto u = j.outer_vertices(f);
        std::set_intersection(u.begin(), u.end(), inner_v.begin(), inner_v.end(), std::back_inserter(near[f]));
        near[f].push_back(j.inner_edges[f].u);
        near[f].push_back(j.inner_edges[f].v);
        near[f] = sorted_unique(std::move(near[f]));
    }
    EdgeOrder out;
    std::vector<int> rest(static_cast<std::size_t>(k));
    for (int f = 0; f < k; ++f) rest[f] = f;
    auto take = [&](int f) {
        rest.erase(std::find(rest.begin(), rest.end(), f));
        out.stack.push_back(f);
    };
    while (!rest.empty()) {
        int seed = -1;
        for (int f : rest) {
            for (int g : rest)
                if (g != f && meets(d[f], d[g])) {
                    seed = f;
                    break;
                }
            if (seed >= 0) break;
        }
        if (seed < 0) {
            std::vector<int> left = rest;
            for (int f : left) {
                take(f);
                out.fall_through.push_back(f);
            }
            break;
        }
        EdgeCluster c;
        take(seed);
        c.edges.push_back(seed);
        c.vertices = near[seed];
        std::vector<Edge> dunion = d[seed];
        for (;;) {
            int pickf = -1;
            for (int f : rest) {
                const Edge& e = j.inner_edges[f];
                bool ends = std::binary_search(c.vertices.begin(), c.vertices.end(), e.u) &&
                            std::binary_search(c.vertices.begin(), c.vertices.end(), e.v);
                if (ends || meets(d[f], dunion)) {
                    pickf = f;
                    break;
                }
            }
            if (pickf < 0) break;
            take(pickf);
            c.edges.push_back(pickf);
            c.vertices.insert(c.vertices.end(), near[pickf].begin(), near[pickf].end());
            c.vertices = sorted_unique(std::move(c.vertices));
            dunion.insert(dunion.end(), d[pickf].begin(), d[pickf].end());
            std::sort(dunion.begin(), dunion.end());
            dunion.erase(std::unique(dunion.begin(), dunion.end()), dunion.end());
        }
        out.clusters.push_back(std::move(c));
    }
    return out;
}

DeltaAccount delta_accounting(const FlowerAttachment& j, const EdgeOrder& order) {
    DeltaAccount acc;
    acc.per_edge.resize(j.inner_edges.size());
    std::set<Edge> prev_d;
    std::set<int> prev_u(j.inner_map.begin(), j.inner_map.end());  // starts with V(H_ê^-)
    for (int f : order.stack) {
        DeltaEntry& de = acc.per_edge[f];
        auto d = j.outer_edges(f);
        auto u = j.outer_vertices(f);
        for (const Edge& e : d)
            if (prev_d.count(e)) de.delta_e.push_back(e);
        for (int x : u)
            if (prev_u.count(x)) de.delta_v.push_back(x);
        for (const Edge& e : de.delta_e) {
            de.t_prime_vertices.push_back(e.u);
            de.t_prime_vertices.push_back(e.v);
        }
        de.t_prime_vertices = sorted_unique(std::move(de.t_prime_vertices));
        acc.sum_e += static_cast<int>(de.delta_e.size());
        acc.sum_v += static_cast<int>(de.delta_v.size());
        prev_d.insert(d.begin(), d.end());
        prev_u.insert(u.begin(), u.end());
    }
    return acc;
}

ExternalDensityReport verify_external_density(const FlowerAttachment& j, const FlowerAttachment& jstar,
                                              const Rational& m2) {
    ExternalDensityReport r;
    std::vector<std::string> fails;
    if (j.classification != FlowerClass::HOnly) fails.push_back("precondition: J is in H* (all disjointness clauses hold)");
    if (jstar.classification != FlowerClass::HStar) fails.push_back("precondition: J* is not in H*");
    if (!(j.base == jstar.base) || j.anchor != jstar.anchor || !(j.h1 == jstar.h1) || !(j.h2 == jstar.h2))
        fails.push_back("precondition: J and J* differ in F, ê, H1 or H2");
    if (!fails.empty()) {
        r.failure = fails.front();
        return r;
    }
    const int v1 = j.h1.vertex_count(), e1 = j.h1.edge_count();
    const int v2 = j.h2.vertex_count(), e2 = j.h2.edge_count();
    r.density_j = Rational(j.e_plus(), j.v_plus());
    r.density_star = Rational(jstar.e_plus(), jstar.v_plus());
    r.closed_form = Rational(e1 * (e2 - 1), (v1 - 2) * (e2 - 1) + v2 - 2);
    if (r.density_star != r.closed_form) fails.push_back("e+(J*)/v+(J*) differs from the closed form");
    if (r.closed_form != m2) fails.push_back("closed form " + to_string(r.closed_form) + " differs from m2 " + to_string(m2));
    if (!(r.density_j > r.density_star))
        fails.push_back("e+(J)/v+(J) = " + to_string(r.density_j) + " is not above " + to_string(r.density_star));

    EdgeOrder order = order_edges(j);
    const int k = static_cast<int>(j.inner_edges.size());
    r.clusters = static_cast<int>(order.clusters.size());
    std::vector<int> seen(static_cast<std::size_t>(k), 0);
    for (int f : order.stack) ++seen[f];
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        fails.push_back("stack does not hold every inner edge exactly once");
    std::vector<int> owner(static_cast<std::size_t>(k), 0);
    for (const auto& c : order.clusters)
        for (int f : c.edges) ++owner[f];
    if (std::any_of(owner.begin(), owner.end(), [](int c) { return c > 1; })) fails.push_back("clusters share an edge");
    if (r.clusters > e2 / 2) fails.push_back("more than floor(e2/2) clusters");
    DeltaAccount acc = delta_accounting(j, order);
    if (j.e_plus() != jstar.e_plus() - acc.sum_e) fails.push_back("e+(J) != e+(J*) - sum of delta_e");
    if (j.v_plus() != jstar.v_plus() - acc.sum_v) fails.push_back("v+(J) != v+(J*) - sum of delta_v");
    for (int f : order.fall_through)
        if (!acc.per_edge[f].delta_e.empty()) fails.push_back("fall-through edge with delta_e > 0");
    for (std::size_t c = 0; c < order.clusters.size(); ++c) {
        int se = 0, sv = 0;
        for (int f : order.clusters[c].edges) {
            se += static_cast<int>(acc.per_edge[f].delta_e.size());
            sv += static_cast<int>(acc.per_edge[f].delta_v.size());
        }
        if (!(Rational(se) < m2 * Rational(sv)))
            fails.push_back("cluster " + std::to_string(c) + ": sum delta_e = " + std::to_string(se) +
                            " is not below m2 * " + std::to_string(sv));
    }
    r.ok = fails.empty();
    if (!r.ok) {
        std::ostringstream os;
        for (std::size_t i = 0; i < fails.size(); ++i) os << (i ? "; " : "") << fails[i];
        r.failure = os.str();
    }
    return r;
}

FlowerAttachment overlap_example() {
    // F: ê = 01, leaves 2,3,4 on 0 and 5,6,7 on 1
    Graph base(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
    // C6 through ê: 0-8-9-10-11-1
    std::vector<int> inner = {0, 8, 9, 10, 11, 1};
    // inner edges sorted: 0-8, 1-11, 8-9, 9-10, 10-11; each C5 given in cycle order
    std::vector<std::vector<int>> pend = {
        {0, 8, 17, 20, 21},    // 0-8: shares outer edge 8-17 with the 8-9 pendant
        {11, 1, 12, 13, 14},   // 1-11: shares outer edge 11-14 with the 10-11 pendant
        {8, 9, 18, 19, 17},    // 8-9
        {9, 10, 18, 17, 0},    // 9-10: reaches back to vertex 0 of ê
        {10, 11, 14, 15, 16},  // 10-11
    };
    return make_flower(base, {0, 1}, cycle_graph(5), cycle_graph(6), std::move(inner), std::move(pend));
}

}  // namespace asr
