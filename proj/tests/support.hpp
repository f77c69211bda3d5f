#pragma once

#include <vector>

#include "epa/graph.hpp"
#include "epa/rng.hpp"
#include "epa/weight.hpp"

namespace epa::testing {

inline Graph random_graph(SplitMix64& rng, int n, std::uint64_t permille) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(permille)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Mixed corpus: n in [min_n, max_n] and density drawn per instance.
inline Graph random_graph(SplitMix64& rng, int max_n, int min_n = 1) {
  const int n = min_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - min_n + 1)));
  return random_graph(rng, n, 100 + rng.below(800));
}

inline Graph random_connected(SplitMix64& rng, int max_n, int min_n = 1) {
  for (;;) {
    Graph g = random_graph(rng, max_n, min_n);
    if (is_connected(g)) return g;
  }
}

/// Weights p/q with p in 0..9 and q in 1..4.
inline WeightFn random_weights(SplitMix64& rng, int n) {
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) w.emplace_back(static_cast<long>(rng.below(10)), static_cast<unsigned long>(1 + rng.below(4)));
  return WeightFn(std::move(w));
}

}  // namespace epa::testing
