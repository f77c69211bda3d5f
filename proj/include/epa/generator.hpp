#pragma once

#include <cstdint>

#include "epa/graph.hpp"
#include "epa/recognizers.hpp"

namespace epa {

struct GeneratorSpec {
  GraphClass base = GraphClass::Cluster;
  int n = 8;  // base graph order
  int k = 0;  // planted modulator size
  std::uint64_t attach_permille = 500;
  std::uint64_t seed = 1;
};

struct Generated {
  Graph graph;  // n + k vertices
  VertexSet planted;
};

/// Base graph from the class, k extra vertices attached at random, then a
/// random relabeling. All draws come from SplitMix64(seed).
Generated generate(const GeneratorSpec& spec);

}  // namespace epa
