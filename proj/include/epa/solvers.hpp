#pragma once

#include <vector>

#include "epa/graph.hpp"
#include "epa/weight.hpp"

namespace epa {

/// Optimum of the vertex cover LP with every value in {0, 1/2, 1}.
struct HalfIntegralLP {
  std::vector<int> halves;  // x_v = halves[v] / 2
  Rational objective;
  VertexSet v0;
  VertexSet vhalf;
  VertexSet v1;
};

/// Vertex-disjoint edges, each as (u, v) with u < v, sorted.
using Matching = std::vector<Edge>;

/// Exact minimum-weight vertex cover of a forest. Throws PreconditionError on a cycle.
VertexSet wvc_forest(const Graph& g, const WeightFn& w);
/// Exact minimum-weight vertex cover of a cograph via its cotree.
/// Throws PreconditionError (naming the P4) otherwise.
VertexSet wvc_cograph(const Graph& g, const WeightFn& w);
/// Every clique minus one heaviest vertex. Throws PreconditionError on an induced P3.
VertexSet wvc_cluster(const Graph& g, const WeightFn& w);

HalfIntegralLP lp_half_integral_vc(const Graph& g, const WeightFn& w);

/// Maximum cardinality matching (Edmonds).
Matching max_matching(const Graph& g);

/// Inclusion-minimal feedback vertex set of weight at most twice the optimum.
VertexSet fvs_2approx(const Graph& g, const WeightFn& w);

/// Non-leaf vertices of a depth-first spanning tree. Throws on disconnected input.
VertexSet cvc_savage(const Graph& g);

/// Edge local ratio: weight at most twice the optimum.
VertexSet vc_2approx(const Graph& g, const WeightFn& w);

}  // namespace epa
