#pragma once

#include <cstdint>
#include <vector>

#include "epa/graph.hpp"
#include "epa/recognizers.hpp"
#include "epa/weight.hpp"

// Exponential-time exact solvers. They work on bitmask copies of the graph
// and share no code with the approximation algorithms they are used to judge.

namespace epa::oracle {

struct Budget {
  int vc = 12;
  int cvc = 12;
  int tp = 12;
  int coloring = 11;
  int modulator = 10;
  int lp = 10;
  std::uint64_t step_limit = 200'000'000;

  /// Every per-problem limit set to n.
  static Budget uniform(int n);
};

/// Absolute ceiling on any budget (bitmask width).
inline constexpr int kMaxOracleVertices = 30;

struct WeightedSet {
  Rational value;
  VertexSet set;
};

struct SizedSet {
  int size = 0;
  VertexSet set;
};

struct Coloring {
  int chi = 0;
  std::vector<int> color;  // 1..chi
};

struct Packing {
  int size = 0;
  std::vector<VertexSet> triangles;
};

/// Minimum-weight vertex cover; ties go to the smaller set, then the lower subset rank.
WeightedSet exact_min_wvc(const Graph& g, const WeightFn& w, const Budget& b = {});
/// Minimum connected vertex cover of a connected graph.
SizedSet exact_min_cvc(const Graph& g, const Budget& b = {});
Coloring exact_chromatic(const Graph& g, const Budget& b = {});
Packing exact_max_tp(const Graph& g, const Budget& b = {});
/// Minimum-weight (unit when w is null) vertex set whose deletion lands in `c`.
WeightedSet exact_min_modulator(const Graph& g, GraphClass c, const WeightFn* w = nullptr, const Budget& b = {});
/// Minimum objective over all {0, 1/2, 1} vertex cover vectors.
Rational exact_lp_vc(const Graph& g, const WeightFn& w, const Budget& b = {});
/// Maximum matching size by subset recursion.
int exact_max_matching(const Graph& g, const Budget& b = {});

}  // namespace epa::oracle
