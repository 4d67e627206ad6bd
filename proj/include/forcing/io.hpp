#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

// Line-oriented problem files, '#' starts a comment:
//   p digraph <n> <m>   |   p graph <n> <m>
//   t <s> <t>            (required for digraphs; makes a graph a path problem)
//   e <u> <v> <w>        (exactly m lines; edge ids follow line order)
// Path problems require every weight >= 1. Weights are bounded by 1e9 in
// absolute value.
using ProblemGraph = std::variant<WeightedDigraph, WeightedMultigraph>;

ProblemGraph parse_graph(std::string_view text);
std::string format_graph(const WeightedDigraph& graph);
std::string format_graph(const WeightedMultigraph& graph);

//   p matroid <ground-size>
//   b <i> <j> ...        (one line per basis; "b" alone is the empty basis)
struct MatroidFile {
  int ground_size = 0;
  std::vector<std::vector<int>> bases;
};

MatroidFile parse_matroid(std::string_view text);

//   w <element-id> <integer>
std::map<int, Weight> parse_weights(std::string_view text);

inline constexpr Weight kMaxAbsWeight = 1'000'000'000;

}  // namespace forcing
