#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "asr/coloring.hpp"
#include "asr/copies.hpp"
#include "asr/graph.hpp"
#include "asr/pair_spec.hpp"

namespace asr {

// Raised when a step that the correctness argument guarantees cannot fail
// does fail; it always indicates a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct StackEntry {
    enum class Kind { edge, l_copy };
    Kind kind = Kind::edge;
    int id = -1;  // edge id, or index of the H2-copy in the input's copy list
};

struct TraceEvent {
    int step = 0;
    std::string action;  // delete_edge, push_l, a_colour, restore_edge, recolour, stuck
    int edge = -1;
    std::vector<int> l_copy;  // edge ids
    Colour colour = Colour::none;
    int measure = -1;  // |E'| + |tracked L| during the deletion phase
};

enum class ColorerStatus { Colored, Stuck, AColourFailed };

struct ColorerOutcome {
    ColorerStatus status = ColorerStatus::Stuck;
    Coloring coloring;                  // Colored
    Graph residual;                     // G' at loop exit, on the input's vertex set
    std::vector<int> residual_edges;    // input edge id of each residual edge
    CopySet live_l;                     // tracked H2-copies at loop exit, as input edge ids
    std::vector<TraceEvent> trace;
    std::string failure;                // AColourFailed
    int guard_decompositions = 0;       // full sg_decompose calls made by the loop guard
};

// The colouring algorithm: delete edges that are no unique (L,R) edge
// intersection, drop tracked L's that leave the L* family, colour the
// remaining sparse A-hat-graph with a_colour, then reinsert edges blue and
// turn one edge of each all-blue popped L red. Ties go to the lowest edge id
// and the first copy in copy-list order.
ColorerOutcome asym_edge_col(const Graph& g, const PairSpec& pair, const std::vector<Graph>& a_hat,
                             bool record_trace = true);

struct StuckReport {
    bool in_C = false;
    bool in_Cstar = false;
    bool is_a_hat_graph = false;
    bool is_sparse = false;
};

// Re-derives the residual's properties from scratch. Throws
// std::invalid_argument unless the outcome is Stuck and InvariantViolation
// if the residual is outside C* or is a sparse A-hat-graph.
StuckReport check_stuck_state(const ColorerOutcome& outcome, const PairSpec& pair, const std::vector<Graph>& a_hat);

std::string to_string(ColorerStatus s);

}  // namespace asr
