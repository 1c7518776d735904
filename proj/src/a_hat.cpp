#include "asr/a_hat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "asr/canonical.hpp"
#include "asr/connectivity.hpp"
#include "asr/density.hpp"
#include "asr/families.hpp"

namespace asr {

namespace {

Rational density_cap(const PairSpec& pair) { return pair.m2_pair + pair.epsilon; }

// m(g) <= cap, by one closure problem: max e(S) - cap|S| is 0 iff no subgraph is denser
bool within_cap(const Graph& g, const Rational& cap) {
    if (!g.has_edges()) return true;
    return max_excess_subgraph(g, cap).value == Rational(0);
}

}  // namespace

bool a_hat_membership(const Graph& a, const PairSpec& pair) {
    if (!is_two_connected(a)) return false;
    if (!within_cap(a, density_cap(pair))) return false;
    CopyIndex idx = build_copy_index(a, pair);
    return pair.pair_case == PairCase::Strict ? in_Cstar(a, idx).member : in_C(a, idx).member;
}

std::vector<Graph> AHatEnumeration::graphs() const {
    std::vector<Graph> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.graph);
    return out;
}

namespace {

// Adjacency bit matrix of a graph on at most 64 vertices, flattened as the
// upper triangle; used to dedupe placements before canonicalising.
std::vector<std::uint64_t> pair_bits(int n, const std::vector<Edge>& edges) {
    std::vector<std::uint64_t> bits(static_cast<std::size_t>((n * (n - 1) / 2 + 63) / 64 + 1), 0);
    bits.back() = static_cast<std::uint64_t>(n);
    for (const Edge& e : edges) {
        int idx = e.v * (e.v - 1) / 2 + e.u;
        bits[static_cast<std::size_t>(idx / 64)] |= std::uint64_t{1} << (idx % 64);
    }
    return bits;
}

class UnionSearch {
public:
    UnionSearch(const PairSpec& pair, int bound) : pair_(pair), bound_(bound), cap_(density_cap(pair)) {}

    std::vector<Graph> run(std::uint64_t& classes) {
        std::vector<Graph> frontier;
        Graph start = canonical_form(pair_.h1).graph;
        seen_.insert(canonical_key(start));
        frontier.push_back(start);
        std::vector<Graph> members;
        while (!frontier.empty()) {
            std::vector<Graph> next;
            for (const Graph& f : frontier) {
                ++classes;
                if (a_hat_membership(f, pair_)) members.push_back(f);
                extend(f, next);
            }
            frontier = std::move(next);
        }
        std::sort(members.begin(), members.end(), [](const Graph& a, const Graph& b) {
            if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
            if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
            return a.edges() < b.edges();
        });
        return members;
    }

private:
    void extend(const Graph& f, std::vector<Graph>& next) {
        const int v = f.vertex_count();
        const int v1 = pair_.h1.vertex_count();
        std::vector<int> image(static_cast<std::size_t>(v1), -1);
        std::vector<char> used(static_cast<std::size_t>(v), 0);
        std::set<std::vector<std::uint64_t>> placed;

        auto finish = [&](int fresh) {
            int n = v + fresh;
            std::vector<Edge> edges = f.edges();
            bool added = false;
            for (const Edge& e : pair_.h1.edges()) {
                int a = image[e.u], b = image[e.v];
                if (a < v && b < v && f.has_edge(a, b)) continue;
                edges.push_back(make_edge(a, b));
                added = true;
            }
            if (!added) return;
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            if (!placed.insert(pair_bits(n, edges)).second) return;
            Graph g(n, std::move(edges));
            if (!within_cap(g, cap_)) return;
            CanonicalForm cf = canonical_form(g);
            if (seen_.insert(emit_key(cf.graph)).second) next.push_back(std::move(cf.graph));
        };

        // map H1 vertices one at a time to an unused vertex of f or to the next fresh vertex
        auto rec = [&](auto&& self, int i, int fresh, bool touched) -> void {
            if (i == v1) {
                if (touched) finish(fresh);
                return;
            }
            for (int x = 0; x < v; ++x) {
                if (used[x]) continue;
                used[x] = 1;
                image[i] = x;
                self(self, i + 1, fresh, true);
                used[x] = 0;
            }
            if (v + fresh < bound_) {
                image[i] = v + fresh;
                self(self, i + 1, fresh + 1, touched);
            }
        };
        rec(rec, 0, 0, false);
    }

    static std::string emit_key(const Graph& canon) {
        std::string key = std::to_string(canon.vertex_count()) + ":";
        for (const Edge& e : canon.edges()) key += std::to_string(e.u) + "," + std::to_string(e.v) + ";";
        return key;
    }

    const PairSpec& pair_;
    int bound_;
    Rational cap_;
    std::unordered_set<std::string> seen_;
};

}  // namespace

AHatEnumeration enumerate_a_hat(const PairSpec& pair, int max_vertices, bool use_degree_bound,
                                std::uint64_t oracle_budget) {
    AHatEnumeration out;
    out.bound = max_vertices;
    if (use_degree_bound) {
        // in a member of C every vertex x on edge e = xy meets L and R, whose
        // edges at x share only e, so deg(x) >= delta(H1) + delta(H2) - 1
        Rational k(pair.h1.min_degree() + pair.h2.min_degree() - 1);
        if (k / Rational(2) > density_cap(pair)) {
            out.all_sizes = true;
            out.method = "min-degree";
            return out;
        }
    }
    if (max_vertices < pair.h2.vertex_count() || max_vertices < pair.h1.vertex_count()) {
        out.method = "bound";
        return out;
    }
    if (max_vertices > 64) throw std::invalid_argument("union search supports at most 64 vertices");
    out.method = "search";
    UnionSearch search(pair, max_vertices);
    for (Graph& g : search.run(out.classes)) {
        AHatMember m;
        OracleResult r = has_valid_coloring(g, pair, oracle_budget);
        m.graph = std::move(g);
        m.verdict = r.verdict;
        m.coloring = std::move(r.coloring);
        out.members.push_back(std::move(m));
    }
    return out;
}

bool SgDecomposition::is_a_hat_graph() const {
    return std::all_of(per_edge_count.begin(), per_edge_count.end(), [](int c) { return c == 1; });
}

SgDecomposition sg_decompose(const Graph& g, const PairSpec& pair, const std::vector<Graph>& a_hat) {
    SgDecomposition dec;
    dec.graph = g;
    std::set<Subgraph> all;
    for (const Graph& a : a_hat)
        for (auto& c : enumerate_copies(g, a).copies) all.insert(std::move(c));
    std::vector<Subgraph> cands(all.begin(), all.end());
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Subgraph& a, const Subgraph& b) { return a.edges.size() > b.edges.size(); });
    std::vector<Subgraph> kept;
    for (const Subgraph& c : cands) {
        bool inside = false;
        for (const Subgraph& k : kept)
            if (k.edges.size() > c.edges.size() && is_subset(c.edges, k.edges) && is_subset(c.vertices, k.vertices)) {
                inside = true;
                break;
            }
        if (!inside) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end());
    dec.members = std::move(kept);

    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    dec.per_edge_count.assign(m, 0);
    dec.edge_members.assign(m, {});
    for (std::size_t i = 0; i < dec.members.size(); ++i)
        for (int e : dec.members[i].edges) {
            ++dec.per_edge_count[e];
            dec.edge_members[e].push_back(static_cast<int>(i));
        }

    std::set<Subgraph> nontrivial;
    auto scan = [&](const Graph& pattern) {
        for (auto& c : enumerate_copies(g, pattern).copies) {
            int first = -1;
            bool several = false;
            for (int e : c.edges) {
                for (int s : dec.edge_members[e]) {
                    if (first < 0) first = s;
                    else if (s != first) several = true;
                }
                if (several) break;
            }
            if (several) nontrivial.insert(std::move(c));
        }
    };
    if (!dec.members.empty()) {
        scan(pair.h1);
        scan(pair.h2);
    }
    dec.nontrivial.assign(nontrivial.begin(), nontrivial.end());
    return dec;
}

AColourResult a_colour(const SgDecomposition& dec, const PairSpec& pair, std::uint64_t budget) {
    AColourResult out;
    const Graph& g = dec.graph;
    out.coloring = Coloring(g);
    if (!dec.is_a_hat_graph() || !dec.is_sparse()) {
        out.failure = "input is not a sparse A-hat-graph";
        return out;
    }
    for (std::size_t i = 0; i < dec.members.size(); ++i) {
        const Subgraph& s = dec.members[i];
        Graph local = to_graph(g, s);
        OracleResult r = has_valid_coloring(local, pair, budget);
        if (r.verdict != Verdict::Valid) {
            out.failure = "member " + std::to_string(i) + " (" + describe(local) + ") has oracle verdict " +
                          to_string(r.verdict);
            return out;
        }
        for (int e : s.edges) {
            const Edge& he = g.edge(e);
            auto pos = [&](int x) {
                return static_cast<int>(std::lower_bound(s.vertices.begin(), s.vertices.end(), x) - s.vertices.begin());
            };
            out.coloring.colour[e] = r.coloring.colour[local.edge_id(pos(he.u), pos(he.v))];
        }
    }
    Violation v = verify_coloring(out.coloring, pair);
    if (!v.ok()) {
        out.failure = "composed colouring fails verification";
        return out;
    }
    out.ok = true;
    return out;
}

AColourResult a_colour(const Graph& g, const PairSpec& pair, const std::vector<Graph>& a_hat, std::uint64_t budget) {
    return a_colour(sg_decompose(g, pair, a_hat), pair, budget);
}

}  // namespace asr
