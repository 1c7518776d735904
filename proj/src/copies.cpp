#include "asr/copies.hpp"

#include <algorithm>
#include <set>

namespace asr {

namespace {

struct Matcher {
    const Graph& host;
    const Graph& pattern;
    const std::function<bool(const Embedding&)>& visit;
    std::vector<int> order;                   // pattern vertices with edges, search order
    std::vector<std::vector<int>> back;       // earlier-ordered neighbours of order[k]
    std::vector<int> isolated;
    std::vector<int> map;
    std::vector<char> used;
    bool stopped = false;

    Matcher(const Graph& h, const Graph& p, const std::function<bool(const Embedding&)>& f)
        : host(h), pattern(p), visit(f) {
        int n = p.vertex_count();
        std::vector<char> placed(static_cast<std::size_t>(n), 0);
        std::vector<int> links(static_cast<std::size_t>(n), 0);
        int with_edges = 0;
        for (int v = 0; v < n; ++v) {
            if (p.degree(v) == 0) isolated.push_back(v);
            else ++with_edges;
        }
        while (static_cast<int>(order.size()) < with_edges) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v] || p.degree(v) == 0) continue;
                if (best < 0 || links[v] > links[best] ||
                    (links[v] == links[best] && p.degree(v) > p.degree(best)))
                    best = v;
            }
            placed[best] = 1;
            order.push_back(best);
            for (int w : p.neighbors(best)) ++links[w];
        }
        std::vector<int> pos(static_cast<std::size_t>(n), -1);
        for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
        back.resize(order.size());
        for (std::size_t k = 0; k < order.size(); ++k)
            for (int w : p.neighbors(order[k]))
                if (pos[w] >= 0 && pos[w] < static_cast<int>(k)) back[k].push_back(w);
        map.assign(static_cast<std::size_t>(n), -1);
        used.assign(static_cast<std::size_t>(h.vertex_count()), 0);
    }

    void emit() {
        Embedding emb;
        std::vector<int> taken;
        for (int v : isolated) {
            int x = 0;
            while (x < host.vertex_count() && used[x]) ++x;
            if (x == host.vertex_count()) return;
            used[x] = 1;
            taken.push_back(x);
            map[v] = x;
        }
        emb.vertex_map = map;
        emb.edge_image.reserve(pattern.edges().size());
        for (const auto& e : pattern.edges()) emb.edge_image.push_back(host.edge_id(map[e.u], map[e.v]));
        std::sort(emb.edge_image.begin(), emb.edge_image.end());
        for (int x : taken) used[x] = 0;
        for (int v : isolated) map[v] = -1;
        if (!visit(emb)) stopped = true;
    }

    bool fits(std::size_t k, int x) const {
        int pv = order[k];
        if (used[x] || host.degree(x) < pattern.degree(pv)) return false;
        for (int w : back[k])
            if (!host.has_edge(map[w], x)) return false;
        return true;
    }

    void extend(std::size_t k) {
        if (stopped) return;
        if (k == order.size()) {
            emit();
            return;
        }
        int pv = order[k];
        auto try_vertex = [&](int x) {
            if (!fits(k, x)) return;
            map[pv] = x;
            used[x] = 1;
            extend(k + 1);
            used[x] = 0;
            map[pv] = -1;
        };
        if (!back[k].empty()) {
            // candidates: neighbours of the image of an earlier neighbour
            int anchor = map[back[k][0]];
            for (int x : host.neighbors(anchor)) {
                try_vertex(x);
                if (stopped) return;
            }
        } else {
            for (int x = 0; x < host.vertex_count(); ++x) {
                try_vertex(x);
                if (stopped) return;
            }
        }
    }
};

}  // namespace

void for_each_embedding(const Graph& host, const Graph& pattern,
                        const std::function<bool(const Embedding&)>& visit) {
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count()) return;
    Matcher m(host, pattern, visit);
    m.extend(0);
}

CopySet enumerate_copies(const Graph& host, const Graph& pattern) {
    CopySet out;
    out.pattern = pattern;
    std::set<std::vector<int>> seen;
    std::vector<Subgraph> found;
    for_each_embedding(host, pattern, [&](const Embedding& emb) {
        if (seen.insert(emb.edge_image).second) {
            Subgraph s;
            s.edges = emb.edge_image;
            s.vertices = sorted_unique(emb.vertex_map);
            found.push_back(std::move(s));
        }
        return true;
    });
    std::sort(found.begin(), found.end(),
              [](const Subgraph& a, const Subgraph& b) { return a.edges < b.edges; });
    out.copies = std::move(found);
    return out;
}

bool contains_copy(const Graph& host, const Graph& pattern) {
    bool any = false;
    for_each_embedding(host, pattern, [&](const Embedding&) {
        any = true;
        return false;
    });
    return any;
}

}  // namespace asr
