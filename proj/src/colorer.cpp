#include "asr/colorer.hpp"

#include <algorithm>
#include <sstream>

#include "asr/a_hat.hpp"
#include "asr/families.hpp"

namespace asr {

namespace {

class Colorer {
public:
    Colorer(const Graph& g, const PairSpec& pair, const std::vector<Graph>& a_hat, bool record)
        : g_(g), pair_(pair), a_hat_(a_hat), record_(record), idx_(build_copy_index(g, pair)) {
        const std::size_t m = static_cast<std::size_t>(g.edge_count());
        const std::size_t nr = idx_.r.size(), nl = idx_.l.size();
        edge_alive_.assign(m, 1);
        live_edges_ = g.edge_count();
        r_dead_.assign(nr, 0);
        l_dead_.assign(nl, 0);
        tracked_.assign(nl, 1);
        tracked_count_ = static_cast<int>(nl);
        r_positions_.assign(nr, {});
        alive_unique_.resize(nl);
        deficient_.assign(nl, 0);
        cnt_tracked_.assign(m, 0);
        cnt_all_.assign(m, 0);
        for (std::size_t li = 0; li < nl; ++li) {
            const auto& le = idx_.l.copies[li].edges;
            alive_unique_[li].assign(le.size(), 0);
            for (std::size_t k = 0; k < le.size(); ++k) {
                for (int ri : idx_.unique_r[li][k]) r_positions_[ri].push_back({static_cast<int>(li), static_cast<int>(k)});
                int c = static_cast<int>(idx_.unique_r[li][k].size());
                alive_unique_[li][k] = c;
                if (c == 0) ++deficient_[li];
                else {
                    ++cnt_tracked_[le[k]];
                    ++cnt_all_[le[k]];
                }
            }
        }
        colour_.assign(m, Colour::none);
    }

    ColorerOutcome run() {
        while (!guard()) {
            int e = removable_edge();
            if (e >= 0) {
                for (int li : idx_.l_by_edge[e])
                    if (tracked_[li]) push_l(li);
                stack_.push_back({StackEntry::Kind::edge, e});
                delete_edge(e);
                event("delete_edge", e, {}, Colour::none);
                continue;
            }
            int li = first_non_star();
            if (li >= 0) {
                push_l(li);
                continue;
            }
            out_.status = ColorerStatus::Stuck;
            event("stuck", -1, {}, Colour::none);
            fill_residual();
            return std::move(out_);
        }
        fill_residual();
        AColourResult ac = a_colour(dec_for(out_.residual), pair_);
        event("a_colour", -1, {}, Colour::none);
        if (!ac.ok) {
            out_.status = ColorerStatus::AColourFailed;
            out_.failure = ac.failure;
            return std::move(out_);
        }
        for (std::size_t i = 0; i < out_.residual_edges.size(); ++i) colour_[out_.residual_edges[i]] = ac.coloring.colour[i];
        replay();
        out_.status = ColorerStatus::Colored;
        out_.coloring = Coloring(g_);
        out_.coloring.colour = colour_;
        return std::move(out_);
    }

private:
    struct Position {
        int l, k;
    };

    bool guard() {
        if (a_hat_.empty()) return live_edges_ == 0;
        if (live_edges_ == 0) return true;
        for (int e = 0; e < g_.edge_count(); ++e)
            if (edge_alive_[e] && cnt_all_[e] == 0) return false;
        if (guard_cache_edges_ != live_edges_) {
            guard_cache_edges_ = live_edges_;
            SgDecomposition d = dec_for(current_graph());
            ++out_.guard_decompositions;
            guard_cache_ = d.is_a_hat_graph() && d.is_sparse();
        }
        return guard_cache_;
    }

    SgDecomposition dec_for(const Graph& h) { return sg_decompose(h, pair_, a_hat_); }

    Graph current_graph() const {
        std::vector<Edge> es;
        for (int e = 0; e < g_.edge_count(); ++e)
            if (edge_alive_[e]) es.push_back(g_.edge(e));
        return Graph(g_.vertex_count(), std::move(es));
    }

    int removable_edge() const {
        for (int e = 0; e < g_.edge_count(); ++e)
            if (edge_alive_[e] && cnt_tracked_[e] == 0) return e;
        return -1;
    }

    int first_non_star() const {
        for (std::size_t li = 0; li < tracked_.size(); ++li)
            if (tracked_[li] && deficient_[li] > 0) return static_cast<int>(li);
        return -1;
    }

    void push_l(int li) {
        stack_.push_back({StackEntry::Kind::l_copy, li});
        const auto& le = idx_.l.copies[li].edges;
        for (std::size_t k = 0; k < le.size(); ++k)
            if (alive_unique_[li][k] > 0) --cnt_tracked_[le[k]];
        tracked_[li] = 0;
        --tracked_count_;
        event("push_l", -1, le, Colour::none);
    }

    // position (l,k) gained or lost its last alive uniquely-intersecting R
    void position_flip(const Position& p, int delta) {
        int e = idx_.l.copies[p.l].edges[p.k];
        deficient_[p.l] -= delta;
        if (tracked_[p.l]) cnt_tracked_[e] += delta;
        if (l_dead_[p.l] == 0) cnt_all_[e] += delta;
    }

    void delete_edge(int e) {
        edge_alive_[e] = 0;
        --live_edges_;
        for (int li : idx_.l_by_edge[e]) {
            if (l_dead_[li]++ == 0) {
                const auto& le = idx_.l.copies[li].edges;
                for (std::size_t k = 0; k < le.size(); ++k)
                    if (alive_unique_[li][k] > 0) --cnt_all_[le[k]];
            }
        }
        for (int ri : idx_.r_by_edge[e])
            if (r_dead_[ri]++ == 0)
                for (const Position& p : r_positions_[ri])
                    if (--alive_unique_[p.l][p.k] == 0) position_flip(p, -1);
    }

    void restore_edge(int e) {
        for (int ri : idx_.r_by_edge[e])
            if (--r_dead_[ri] == 0)
                for (const Position& p : r_positions_[ri])
                    if (alive_unique_[p.l][p.k]++ == 0) position_flip(p, +1);
        for (int li : idx_.l_by_edge[e]) {
            if (--l_dead_[li] == 0) {
                const auto& le = idx_.l.copies[li].edges;
                for (std::size_t k = 0; k < le.size(); ++k)
                    if (alive_unique_[li][k] > 0) ++cnt_all_[le[k]];
            }
        }
        edge_alive_[e] = 1;
        ++live_edges_;
    }

    void replay() {
        while (!stack_.empty()) {
            StackEntry top = stack_.back();
            stack_.pop_back();
            if (top.kind == StackEntry::Kind::edge) {
                restore_edge(top.id);
                colour_[top.id] = Colour::blue;
                event("restore_edge", top.id, {}, Colour::blue);
                continue;
            }
            const auto& le = idx_.l.copies[top.id].edges;
            bool all_blue = std::all_of(le.begin(), le.end(), [&](int e) { return colour_[e] == Colour::blue; });
            if (!all_blue) continue;
            int f = -1;
            for (std::size_t k = 0; k < le.size(); ++k)
                if (alive_unique_[top.id][k] == 0) {
                    f = le[k];
                    break;
                }
            if (f < 0) fail("no recolourable edge on a blue H2-copy", le);
            colour_[f] = Colour::red;
            for (int ri : idx_.r_by_edge[f]) {
                if (r_dead_[ri]) continue;
                const auto& re = idx_.r.copies[ri].edges;
                if (std::all_of(re.begin(), re.end(), [&](int e) { return colour_[e] == Colour::red; }))
                    fail("recolouring created a red H1-copy", re);
            }
            event("recolour", f, le, Colour::red);
        }
    }

    [[noreturn]] void fail(const std::string& what, const std::vector<int>& copy) const {
        std::ostringstream os;
        os << what << " at copy {";
        for (int e : copy) os << ' ' << e;
        os << " }; trace:";
        for (const auto& t : out_.trace) os << "\n  " << t.step << ' ' << t.action << ' ' << t.edge;
        throw InvariantViolation(os.str());
    }

    void event(const char* action, int edge, const std::vector<int>& l, Colour c) {
        ++step_;
        if (!record_) return;
        TraceEvent t;
        t.step = step_;
        t.action = action;
        t.edge = edge;
        t.l_copy = l;
        t.colour = c;
        t.measure = live_edges_ + tracked_count_;
        out_.trace.push_back(std::move(t));
    }

    void fill_residual() {
        out_.residual_edges.clear();
        for (int e = 0; e < g_.edge_count(); ++e)
            if (edge_alive_[e]) out_.residual_edges.push_back(e);
        out_.residual = current_graph();
        out_.live_l.pattern = pair_.h2;
        out_.live_l.copies.clear();
        for (std::size_t li = 0; li < tracked_.size(); ++li)
            if (tracked_[li]) out_.live_l.copies.push_back(idx_.l.copies[li]);
    }

    const Graph& g_;
    const PairSpec& pair_;
    const std::vector<Graph>& a_hat_;
    bool record_;
    CopyIndex idx_;

    std::vector<char> edge_alive_;
    int live_edges_ = 0;
    std::vector<int> r_dead_, l_dead_;  // dead edges per copy
    std::vector<char> tracked_;
    int tracked_count_ = 0;
    std::vector<std::vector<Position>> r_positions_;
    std::vector<std::vector<int>> alive_unique_;  // alive unique R's per (L, position)
    std::vector<int> deficient_;                  // positions of L with none
    std::vector<int> cnt_tracked_, cnt_all_;      // per edge: positions with a live pair
    std::vector<Colour> colour_;
    std::vector<StackEntry> stack_;
    int step_ = 0;
    int guard_cache_edges_ = -1;
    bool guard_cache_ = false;
    ColorerOutcome out_;
};

}  // namespace

ColorerOutcome asym_edge_col(const Graph& g, const PairSpec& pair, const std::vector<Graph>& a_hat, bool record_trace) {
    return Colorer(g, pair, a_hat, record_trace).run();
}

StuckReport check_stuck_state(const ColorerOutcome& outcome, const PairSpec& pair, const std::vector<Graph>& a_hat) {
    if (outcome.status != ColorerStatus::Stuck) throw std::invalid_argument("check_stuck_state needs a Stuck outcome");
    StuckReport rep;
    const Graph& h = outcome.residual;
    auto fam = family_report(h, pair);
    rep.in_C = fam.in_C;
    rep.in_Cstar = fam.in_Cstar;
    auto dec = sg_decompose(h, pair, a_hat);
    rep.is_a_hat_graph = dec.is_a_hat_graph();
    rep.is_sparse = dec.is_sparse();
    if (!h.has_edges()) throw InvariantViolation("stuck on an edgeless residual");
    if (!rep.in_Cstar) throw InvariantViolation("stuck residual is not in C*: " + describe(h));
    if (rep.is_a_hat_graph && rep.is_sparse) throw InvariantViolation("stuck residual is a sparse A-hat-graph");
    return rep;
}

std::string to_string(ColorerStatus s) {
    switch (s) {
        case ColorerStatus::Colored: return "colored";
        case ColorerStatus::Stuck: return "stuck";
        case ColorerStatus::AColourFailed: return "a_colour_failed";
    }
    return "?";
}

}  // namespace asr
