#include "asr/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "asr/copies.hpp"

namespace asr {

bool Coloring::total() const {
    return std::none_of(colour.begin(), colour.end(), [](Colour c) { return c == Colour::none; });
}

Violation verify_coloring(const Coloring& c, const PairSpec& pair) {
    Violation v;
    if (static_cast<int>(c.colour.size()) != c.graph.edge_count())
        throw std::invalid_argument("colouring size does not match its graph");
    for (int e = 0; e < c.graph.edge_count(); ++e)
        if (c.colour[e] == Colour::none) {
            v.kind = Violation::Kind::uncoloured;
            v.edge = e;
            return v;
        }
    auto mono = [&](const Graph& pattern, Colour col, Violation::Kind kind) {
        bool found = false;
        for_each_embedding(c.graph, pattern, [&](const Embedding& emb) {
            for (int e : emb.edge_image)
                if (c.colour[e] != col) return true;
            v.kind = kind;
            v.copy = emb.edge_image;
            found = true;
            return false;
        });
        return found;
    };
    if (mono(pair.h1, Colour::red, Violation::Kind::red_h1)) return v;
    mono(pair.h2, Colour::blue, Violation::Kind::blue_h2);
    return v;
}

namespace {

struct Constraint {
    std::vector<int> edges;
    Colour forbidden;
    int hits = 0;    // edges already in the forbidden colour
    int others = 0;  // edges in the other colour (constraint satisfied)
};

Colour opposite(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }

class Searcher {
public:
    Searcher(const Graph& g, const PairSpec& pair, std::uint64_t budget) : g_(g), budget_(budget) {
        auto add = [&](const Graph& pattern, Colour forbidden) {
            for (auto& c : enumerate_copies(g, pattern).copies) {
                Constraint k;
                k.edges = std::move(c.edges);
                k.forbidden = forbidden;
                cons_.push_back(std::move(k));
            }
        };
        add(pair.h1, Colour::red);
        add(pair.h2, Colour::blue);
        by_edge_.assign(static_cast<std::size_t>(g.edge_count()), {});
        for (std::size_t i = 0; i < cons_.size(); ++i)
            for (int e : cons_[i].edges) by_edge_[e].push_back(static_cast<int>(i));
        colour_.assign(static_cast<std::size_t>(g.edge_count()), Colour::none);
    }

    OracleResult run() {
        OracleResult out;
        bool found = false;
        try {
            found = solve();
        } catch (const BudgetHit&) {
            out.verdict = Verdict::BudgetExceeded;
            out.nodes = nodes_;
            return out;
        }
        out.nodes = nodes_;
        if (!found) {
            out.verdict = Verdict::Invalid;
            return out;
        }
        out.verdict = Verdict::Valid;
        out.coloring = Coloring(g_);
        out.coloring.colour = colour_;
        return out;
    }

private:
    struct BudgetHit {};

    // Assign and propagate; false on conflict. Assignments go on the trail.
    bool assign(int e, Colour col) {
        std::vector<std::pair<int, Colour>> queue{{e, col}};
        while (!queue.empty()) {
            auto [x, c] = queue.back();
            queue.pop_back();
            if (colour_[x] != Colour::none) {
                if (colour_[x] != c) return false;
                continue;
            }
            colour_[x] = c;
            trail_.push_back(x);
            for (int ci : by_edge_[x]) {
                Constraint& k = cons_[ci];
                if (c == k.forbidden) ++k.hits;
                else ++k.others;
            }
            for (int ci : by_edge_[x]) {
                const Constraint& k = cons_[ci];
                if (k.others > 0) continue;
                int size = static_cast<int>(k.edges.size());
                if (k.hits == size) return false;
                if (k.hits == size - 1)
                    for (int y : k.edges)
                        if (colour_[y] == Colour::none) queue.push_back({y, opposite(k.forbidden)});
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            int x = trail_.back();
            trail_.pop_back();
            for (int ci : by_edge_[x]) {
                Constraint& k = cons_[ci];
                if (colour_[x] == k.forbidden) --k.hits;
                else --k.others;
            }
            colour_[x] = Colour::none;
        }
    }

    bool solve() {
        if (++nodes_ > budget_) throw BudgetHit{};
        // most constrained open copy: fewest uncoloured edges
        int best = -1;
        int best_free = 0;
        for (std::size_t i = 0; i < cons_.size(); ++i) {
            const Constraint& k = cons_[i];
            if (k.others > 0) continue;
            int free = static_cast<int>(k.edges.size()) - k.hits;
            if (best < 0 || free < best_free) {
                best = static_cast<int>(i);
                best_free = free;
            }
        }
        if (best < 0) {
            // every copy already has both colours; the rest is unconstrained
            for (int e = 0; e < g_.edge_count(); ++e)
                if (colour_[e] == Colour::none) colour_[e] = Colour::red;
            return true;
        }
        const Constraint& k = cons_[best];
        int edge = -1;
        for (int e : k.edges)
            if (colour_[e] == Colour::none) {
                edge = e;
                break;
            }
        Colour first = opposite(k.forbidden);
        for (Colour c : {first, opposite(first)}) {
            std::size_t mark = trail_.size();
            if (assign(edge, c) && solve()) return true;
            undo(mark);
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Constraint> cons_;
    std::vector<std::vector<int>> by_edge_;
    std::vector<Colour> colour_;
    std::vector<int> trail_;
};

}  // namespace

OracleResult has_valid_coloring(const Graph& g, const PairSpec& pair, std::uint64_t budget) {
    Searcher s(g, pair, budget);
    OracleResult r = s.run();
    if (r.verdict == Verdict::Valid && !verify_coloring(r.coloring, pair).ok())
        throw std::logic_error("oracle produced a colouring that fails verification");
    return r;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Valid: return "valid";
        case Verdict::Invalid: return "invalid";
        case Verdict::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

std::string to_string(Colour c) {
    switch (c) {
        case Colour::none: return "none";
        case Colour::red: return "red";
        case Colour::blue: return "blue";
    }
    return "?";
}

}  // namespace asr
