#include "asr/density.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

namespace asr {

namespace {

constexpr int kMaxExhaustive = 26;

// Visits every vertex subset as (mask, vertex count, edge count).
template <typename Fn>
void for_each_subset(const Graph& g, Fn&& fn) {
    int n = g.vertex_count();
    if (n > kMaxExhaustive) throw std::invalid_argument("subset enumeration limited to 26 vertices");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::uint32_t total = n == 0 ? 1u : (1u << n);
    std::vector<std::uint16_t> ecount(total, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        int top = 31 - std::countl_zero(mask);
        std::uint32_t rest = mask & ~(1u << top);
        ecount[mask] = static_cast<std::uint16_t>(ecount[rest] + std::popcount(adj[top] & rest));
    }
    for (std::uint32_t mask = 0; mask < total; ++mask) fn(mask, std::popcount(mask), static_cast<int>(ecount[mask]));
}

std::vector<int> mask_vertices(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

Rational d2_value(int v, int e) {
    if (e == 0) return 0;
    if (v == 2) return Rational(1, 2);
    if (v >= 3) return Rational(e - 1, v - 2);
    return 0;
}

Rational d2_asym_value(int v, int e, const Rational& m2_h2) {
    if (e == 0 || v < 2 || m2_h2 <= 0) return 0;
    return Rational(e) / (Rational(v - 2) + Rational(1) / m2_h2);
}

// Maximum over subsets of a value(v, e), witness = fewest vertices then
// smallest mask. Also reports whether the full vertex set is the unique
// maximiser among proper vertex subsets (strict comparison).
template <typename Value>
Extremum max_over_subsets(const Graph& g, Value&& value) {
    Rational best = 0;
    std::uint32_t best_mask = 0;
    int best_v = 0;
    bool have = false;
    for_each_subset(g, [&](std::uint32_t mask, int v, int e) {
        Rational x = value(v, e);
        if (!have || x > best || (x == best && v < best_v)) {
            have = true;
            best = x;
            best_mask = mask;
            best_v = v;
        }
    });
    return {best, mask_vertices(best_mask)};
}

// true iff value(proper subset) cmp value(full) never fails, where proper
// ranges over vertex subsets other than the full set (with at least one vertex)
// and edge-deleted subgraphs on the full set.
template <typename Value>
bool dominates_all_proper(const Graph& g, Value&& value, bool strict) {
    int n = g.vertex_count();
    Rational whole = value(n, g.edge_count());
    std::uint32_t full = (1u << n) - 1;
    bool ok = true;
    for_each_subset(g, [&](std::uint32_t mask, int v, int e) {
        if (!ok || mask == full || v == 0) return;
        Rational x = value(v, e);
        if (strict ? !(x < whole) : !(x <= whole)) ok = false;
    });
    if (ok && g.edge_count() > 0) {
        Rational x = value(n, g.edge_count() - 1);
        if (strict ? !(x < whole) : !(x <= whole)) ok = false;
    }
    return ok;
}

using Traits = boost::adjacency_list_traits<boost::listS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::listS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, std::int64_t,
                    boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

}  // namespace

Rational d_density(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return Rational(g.edge_count(), g.vertex_count());
}

Rational d2_density(const Graph& g) { return d2_value(g.vertex_count(), g.edge_count()); }

ClosureResult max_excess_subgraph(const Graph& g, const Rational& t) {
    if (t <= 0) throw std::invalid_argument("max_excess_subgraph needs t > 0");
    const std::int64_t p = t.numerator();
    const std::int64_t q = t.denominator();
    const int n = g.vertex_count();
    const int m = g.edge_count();
    // nodes: 0 = source, 1 = sink, 2.. vertices, then edges
    FlowGraph fg(static_cast<std::size_t>(2 + n + m));
    auto cap = boost::get(boost::edge_capacity, fg);
    auto res = boost::get(boost::edge_residual_capacity, fg);
    auto rev = boost::get(boost::edge_reverse, fg);
    auto add = [&](int a, int b, std::int64_t c) {
        auto e1 = boost::add_edge(a, b, fg).first;
        auto e2 = boost::add_edge(b, a, fg).first;
        cap[e1] = c;
        cap[e2] = 0;
        rev[e1] = e2;
        rev[e2] = e1;
    };
    const std::int64_t inf = q * static_cast<std::int64_t>(m) + 1;
    for (int i = 0; i < m; ++i) {
        add(0, 2 + n + i, q);
        add(2 + n + i, 2 + g.edge(i).u, inf);
        add(2 + n + i, 2 + g.edge(i).v, inf);
    }
    for (int v = 0; v < n; ++v) add(2 + v, 1, p);
    std::int64_t flow = boost::push_relabel_max_flow(fg, 0, 1);

    const std::size_t total = static_cast<std::size_t>(2 + n + m);
    // forward reachability from the source: minimal optimal closure
    std::vector<char> from_s(total, 0);
    std::vector<int> stack{0};
    from_s[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto [it, end] = boost::out_edges(x, fg); it != end; ++it) {
            int y = static_cast<int>(boost::target(*it, fg));
            if (res[*it] > 0 && !from_s[y]) {
                from_s[y] = 1;
                stack.push_back(y);
            }
        }
    }
    // backward reachability to the sink: its complement is the maximal closure
    std::vector<char> to_t(total, 0);
    stack = {1};
    to_t[1] = 1;
    while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        for (auto [it, end] = boost::out_edges(y, fg); it != end; ++it) {
            int x = static_cast<int>(boost::target(*it, fg));
            if (res[rev[*it]] > 0 && !to_t[x]) {
                to_t[x] = 1;
                stack.push_back(x);
            }
        }
    }
    ClosureResult out;
    for (int v = 0; v < n; ++v) {
        if (from_s[2 + v]) out.min_set.push_back(v);
        if (!to_t[2 + v]) out.max_set.push_back(v);
    }
    out.value = Rational(q * static_cast<std::int64_t>(m) - flow, q);
    return out;
}

Extremum m_density(const Graph& g) {
    if (g.edge_count() == 0) {
        if (g.vertex_count() == 0) return {0, {}};
        return {0, {0}};
    }
    // Dinkelbach iteration on e(S) - t|S|
    Rational t = d_density(g);
    while (true) {
        ClosureResult r = max_excess_subgraph(g, t);
        if (r.value <= 0) break;
        t = d_density(induced_subgraph(g, r.min_set));
    }
    // At t = m the maximal maximiser is the union of all densest subgraphs;
    // drop vertices while some densest subgraph survives.
    std::vector<int> witness = max_excess_subgraph(g, t).max_set;
    for (std::size_t i = 0; i < witness.size();) {
        std::vector<int> rest = witness;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        Graph sub = induced_subgraph(g, rest);
        std::vector<int> keep;
        if (sub.has_edges()) {
            ClosureResult r = max_excess_subgraph(sub, t);
            if (r.value == 0)
                for (int v : r.max_set) keep.push_back(rest[static_cast<std::size_t>(v)]);
        }
        if (keep.empty()) {
            ++i;
        } else {
            witness = keep;
            i = 0;
        }
    }
    return {t, witness};
}

Extremum m2_density(const Graph& g) {
    return max_over_subsets(g, [](int v, int e) { return d2_value(v, e); });
}

Rational d2_asym(const Graph& g1, const Rational& m2_h2) {
    return d2_asym_value(g1.vertex_count(), g1.edge_count(), m2_h2);
}

Rational d2_asym(const Graph& g1, const Graph& h2) {
    if (!h2.has_edges()) return 0;
    return d2_asym(g1, m2_density(h2).value);
}

Extremum m2_asym(const Graph& h1, const Rational& m2_h2) {
    return max_over_subsets(h1, [&](int v, int e) { return d2_asym_value(v, e, m2_h2); });
}

Extremum m2_asym(const Graph& h1, const Graph& h2) {
    if (!h2.has_edges()) return {0, {}};
    return m2_asym(h1, m2_density(h2).value);
}

DensityProfile density_profile(const Graph& g) {
    DensityProfile p;
    p.d = d_density(g);
    p.d2 = d2_density(g);
    auto m = m_density(g);
    auto m2 = m2_density(g);
    p.m = m.value;
    p.witness_m = m.vertices;
    p.m2 = m2.value;
    p.witness_m2 = m2.vertices;
    return p;
}

bool balancedness(const Graph& g, Balance mode) {
    auto d = [](int v, int e) { return v == 0 ? Rational(0) : Rational(e, v); };
    switch (mode) {
        case Balance::balanced: return dominates_all_proper(g, d, false);
        case Balance::strictly_balanced: return dominates_all_proper(g, d, true);
        case Balance::two_balanced: return dominates_all_proper(g, d2_value, false);
        case Balance::strictly_two_balanced: return dominates_all_proper(g, d2_value, true);
    }
    return false;
}

bool asym_balancedness(const Graph& h1, const Graph& h2, bool strict) {
    if (!h2.has_edges()) return false;
    Rational m2h2 = m2_density(h2).value;
    return dominates_all_proper(h1, [&](int v, int e) { return d2_asym_value(v, e, m2h2); }, strict);
}

Rational lambda(int vertices, int edges, const Rational& m2_pair) {
    return Rational(vertices) - Rational(edges) / m2_pair;
}

Rational lambda(const Graph& f, const Rational& m2_pair) {
    return lambda(f.vertex_count(), f.edge_count(), m2_pair);
}

}  // namespace asr
