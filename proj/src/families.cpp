#include "asr/families.hpp"

namespace asr {

CopyIndex build_copy_index(const Graph& g, const PairSpec& pair) {
    CopyIndex idx;
    idx.r = enumerate_copies(g, pair.h1);
    idx.l = enumerate_copies(g, pair.h2);
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    idx.r_by_edge.assign(m, {});
    idx.l_by_edge.assign(m, {});
    for (std::size_t i = 0; i < idx.r.copies.size(); ++i)
        for (int e : idx.r.copies[i].edges) idx.r_by_edge[e].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < idx.l.copies.size(); ++i)
        for (int e : idx.l.copies[i].edges) idx.l_by_edge[e].push_back(static_cast<int>(i));

    std::vector<int> mark(m, -1);
    idx.unique_r.resize(idx.l.copies.size());
    for (std::size_t li = 0; li < idx.l.copies.size(); ++li) {
        const auto& le = idx.l.copies[li].edges;
        for (int e : le) mark[e] = static_cast<int>(li);
        auto& per = idx.unique_r[li];
        per.resize(le.size());
        for (std::size_t k = 0; k < le.size(); ++k) {
            for (int ri : idx.r_by_edge[le[k]]) {
                int shared = 0;
                for (int f : idx.r.copies[ri].edges)
                    if (mark[f] == static_cast<int>(li)) ++shared;
                if (shared == 1) per[k].push_back(ri);
            }
        }
    }
    return idx;
}

std::vector<int> lstar_ids(const CopyIndex& idx) {
    std::vector<int> out;
    for (std::size_t li = 0; li < idx.unique_r.size(); ++li) {
        bool all = true;
        for (const auto& rs : idx.unique_r[li])
            if (rs.empty()) all = false;
        if (all) out.push_back(static_cast<int>(li));
    }
    return out;
}

CopySet lstar_members(const Graph& g, const PairSpec& pair) {
    CopyIndex idx = build_copy_index(g, pair);
    CopySet out;
    out.pattern = pair.h2;
    for (int li : lstar_ids(idx)) out.copies.push_back(idx.l.copies[li]);
    return out;
}

Membership in_C(const Graph& g, const CopyIndex& idx) {
    std::vector<char> covered(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t li = 0; li < idx.unique_r.size(); ++li)
        for (std::size_t k = 0; k < idx.unique_r[li].size(); ++k)
            if (!idx.unique_r[li][k].empty()) covered[idx.l.copies[li].edges[k]] = 1;
    Membership out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!covered[e]) out.failing_edges.push_back(e);
    out.member = out.failing_edges.empty();
    return out;
}

Membership in_Cstar(const Graph& g, const CopyIndex& idx) {
    Membership out;
    for (int li : lstar_ids(idx))
        for (int e : idx.l.copies[li].edges) out.witness.emplace(e, li);
    for (int e = 0; e < g.edge_count(); ++e)
        if (!out.witness.count(e)) out.failing_edges.push_back(e);
    out.member = out.failing_edges.empty();
    return out;
}

Membership in_C(const Graph& g, const PairSpec& pair) { return in_C(g, build_copy_index(g, pair)); }

Membership in_Cstar(const Graph& g, const PairSpec& pair) { return in_Cstar(g, build_copy_index(g, pair)); }

FamilyReport family_report(const Graph& g, const PairSpec& pair) {
    CopyIndex idx = build_copy_index(g, pair);
    FamilyReport rep;
    rep.graph = g;
    auto c = in_C(g, idx);
    auto cs = in_Cstar(g, idx);
    rep.in_C = c.member;
    rep.in_Cstar = cs.member;
    rep.c_failures = c.failing_edges;
    rep.cstar_failures = cs.failing_edges;
    rep.lstar_copies.pattern = pair.h2;
    for (int li : lstar_ids(idx)) rep.lstar_copies.copies.push_back(idx.l.copies[li]);
    return rep;
}

}  // namespace asr
