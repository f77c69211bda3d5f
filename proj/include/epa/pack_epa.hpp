#pragma once

#include <vector>

#include "epa/graph.hpp"

namespace epa {

struct TrianglePackingSol {
  std::vector<VertexSet> triangles;
  int size = 0;
};

/// Greedy packing with no triangle left among uncovered vertices.
TrianglePackingSol tp_maximal(const Graph& g);
/// Local search until no swap of r <= 2 packed triangles for r + 1 new ones exists.
TrianglePackingSol tp_3maximal(const Graph& g);
/// True when some swap of r <= 2 packed triangles for r + 1 others exists
/// (exhaustive; used to certify 3-maximality).
bool has_improving_swap(const Graph& g, const std::vector<VertexSet>& packing);

}  // namespace epa
