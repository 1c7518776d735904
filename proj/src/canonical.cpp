#include "asr/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "asr/graph_io.hpp"

namespace asr {

namespace {

using Colouring = std::vector<int>;

int count_colours(const Colouring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Rank vertices by key; equal keys share a colour. Colours are 0..k-1.
template <typename Key>
Colouring rank_by(const std::vector<Key>& keys) {
    std::vector<int> idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    Colouring out(keys.size());
    int colour = -1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i == 0 || keys[idx[i - 1]] < keys[idx[i]]) ++colour;
        out[idx[i]] = colour;
    }
    return out;
}

void refine(const Graph& g, Colouring& c) {
    int n = g.vertex_count();
    int k = count_colours(c);
    while (true) {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& key = keys[v];
            key.push_back(c[v]);
            for (int w : g.neighbors(v)) key.push_back(c[w]);
            std::sort(key.begin() + 1, key.end());
        }
        Colouring next = rank_by(keys);
        int nk = count_colours(next);
        c = std::move(next);
        if (nk == k) return;
        k = nk;
    }
}

Colouring individualise(const Colouring& c, int x) {
    std::vector<std::pair<int, int>> keys(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) keys[v] = {c[v], static_cast<int>(v) == x ? 0 : 1};
    return rank_by(keys);
}

struct Search {
    const Graph& g;
    int n;
    bool have_best = false;
    std::vector<Edge> best_edges;
    std::vector<int> best_label;
    std::vector<std::vector<int>> autos;  // as permutations

    explicit Search(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    std::vector<Edge> leaf_edges(const Colouring& lab) const {
        std::vector<Edge> es;
        es.reserve(g.edges().size());
        for (const auto& e : g.edges()) es.push_back(make_edge(lab[e.u], lab[e.v]));
        std::sort(es.begin(), es.end());
        return es;
    }

    void leaf(const Colouring& lab) {
        auto es = leaf_edges(lab);
        if (!have_best || es < best_edges) {
            have_best = true;
            best_edges = std::move(es);
            best_label = lab;
        } else if (es == best_edges) {
            // v -> w with best_label[w] == lab[v]
            std::vector<int> inv(static_cast<std::size_t>(n));
            for (int w = 0; w < n; ++w) inv[best_label[w]] = w;
            std::vector<int> perm(static_cast<std::size_t>(n));
            bool identity = true;
            for (int v = 0; v < n; ++v) {
                perm[v] = inv[lab[v]];
                if (perm[v] != v) identity = false;
            }
            if (!identity) autos.push_back(std::move(perm));
        }
    }

    bool twins(int a, int b) const {
        if (g.degree(a) != g.degree(b)) return false;
        std::vector<int> na, nb;
        for (int w : g.neighbors(a))
            if (w != b) na.push_back(w);
        for (int w : g.neighbors(b))
            if (w != a) nb.push_back(w);
        return na == nb;
    }

    // representative of x in the orbits of the automorphisms fixing prefix
    std::vector<int> orbit_reps(const std::vector<int>& prefix) const {
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& p : autos) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return p[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(p[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n; ++v) parent[v] = find(v);
        return parent;
    }

    void dfs(const Colouring& c, std::vector<int>& prefix) {
        int k = count_colours(c);
        if (k == n) {
            leaf(c);
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(k), 0);
        for (int v = 0; v < n; ++v) ++size[c[v]];
        int target = -1;
        for (int col = 0; col < k; ++col)
            if (size[col] > 1 && (target < 0 || size[col] < size[target])) target = col;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (c[v] == target) cell.push_back(v);

        std::vector<int> done;
        for (int x : cell) {
            bool skip = false;
            for (int y : done)
                if (twins(x, y)) skip = true;
            if (!skip && !autos.empty()) {
                auto reps = orbit_reps(prefix);
                for (int y : done)
                    if (reps[x] == reps[y]) skip = true;
            }
            if (skip) continue;
            Colouring child = individualise(c, x);
            refine(g, child);
            prefix.push_back(x);
            dfs(child, prefix);
            prefix.pop_back();
            done.push_back(x);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.vertex_count();
    Search s(g);
    std::vector<int> degs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    Colouring c = rank_by(degs);
    refine(g, c);
    std::vector<int> prefix;
    s.dfs(c, prefix);
    CanonicalForm out;
    out.labeling = n == 0 ? std::vector<int>{} : s.best_label;
    out.graph = Graph(n, s.best_edges);
    return out;
}

std::string canonical_key(const Graph& g) { return emit_graph6(canonical_form(g).graph); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace asr
