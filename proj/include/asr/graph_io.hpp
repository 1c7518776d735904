#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "asr/graph.hpp"

namespace asr {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// one "u v" pair per line, 0-indexed; '#' comments; an optional "n <count>"
// line fixes the vertex count (otherwise max endpoint + 1)
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// graph6 or edge list, or a path to a file holding either
Graph load_graph(const std::string& arg);

}  // namespace asr
