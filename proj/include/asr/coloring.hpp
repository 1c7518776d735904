#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asr/graph.hpp"
#include "asr/pair_spec.hpp"

namespace asr {

enum class Colour : std::uint8_t { none, red, blue };

struct Coloring {
    Graph graph;
    std::vector<Colour> colour;  // by edge id

    Coloring() = default;
    explicit Coloring(Graph g)
        : graph(std::move(g)), colour(static_cast<std::size_t>(graph.edge_count()), Colour::none) {}
    bool total() const;
};

struct Violation {
    enum class Kind { none, uncoloured, red_h1, blue_h2 };
    Kind kind = Kind::none;
    int edge = -1;           // for uncoloured
    std::vector<int> copy;   // edge ids of the monochromatic copy
    bool ok() const { return kind == Kind::none; }
};

// Independent check by copy enumeration.
Violation verify_coloring(const Coloring& c, const PairSpec& pair);

enum class Verdict { Valid, Invalid, BudgetExceeded };

struct OracleResult {
    Verdict verdict = Verdict::BudgetExceeded;
    Coloring coloring;  // set when Valid
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

// Backtracking search for a colouring with no red H1 and no blue H2, with
// unit propagation over copies that are one edge short of monochromatic.
// Invalid means g arrows (H1, H2).
OracleResult has_valid_coloring(const Graph& g, const PairSpec& pair, std::uint64_t budget = kDefaultBudget);

std::string to_string(Verdict v);
std::string to_string(Colour c);

}  // namespace asr
