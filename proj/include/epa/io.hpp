#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "epa/graph.hpp"
#include "epa/weight.hpp"

namespace epa {

struct Instance {
  Graph graph;
  WeightFn weights;
};

/// Text format, 1-indexed:
///   c <comment>
///   p epa <n> <m>
///   v <id> <p/q>      (optional; absent vertices weigh 1)
///   e <u> <v>
/// Throws ParseError with the offending line.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst, const std::vector<std::string>& comments = {});

/// Reads "p/q" or "p" with nonnegative integers and q > 0.
bool parse_rational(std::string_view s, Rational& out);

}  // namespace epa
