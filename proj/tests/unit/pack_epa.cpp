#include <doctest.h>

#include "epa/check.hpp"
#include "epa/generator.hpp"
#include "epa/graph_builders.hpp"
#include "epa/oracle.hpp"
#include "epa/pack_epa.hpp"
#include "support.hpp"

using namespace epa;

TEST_CASE("maximal packing") {
  CHECK(tp_maximal(named::complete(3)).size == 1);
  CHECK(tp_maximal(named::cycle(6)).size == 0);
  CHECK(tp_maximal(named::complete(6)).size == 2);
  SplitMix64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(rng, 10);
    const TrianglePackingSol s = tp_maximal(g);
    CHECK(check::is_triangle_packing(g, s.triangles));
    VertexSet used(static_cast<std::size_t>(g.order()));
    for (const auto& t : s.triangles) used |= t;
    CHECK(oracle::exact_max_tp(delete_vertices(g, used).graph).size == 0);
    CHECK(s.size >= oracle::exact_max_tp(g).size - oracle::exact_min_modulator(g, GraphClass::Cluster).value);
  }
}

TEST_CASE("3-maximal packing") {
  CHECK(tp_3maximal(named::complete(3)).size == 1);
  CHECK(tp_3maximal(full_join(named::complete(3), named::complete(3))).size == 2);
  CHECK(tp_3maximal(complement(disjoint_union(named::complete(3), named::complete(3)))).size ==
        oracle::exact_max_tp(complement(disjoint_union(named::complete(3), named::complete(3)))).size);
  SplitMix64 rng(59);
  for (int i = 0; i < 150; ++i) {
    const Graph g = testing::random_graph(rng, 12);
    const TrianglePackingSol s = tp_3maximal(g);
    CHECK(check::is_triangle_packing(g, s.triangles));
    CHECK_FALSE(has_improving_swap(g, s.triangles));
  }
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Generated gen = generate({GraphClass::Cocluster, 12, 0, 500, seed});
    CHECK(tp_3maximal(gen.graph).size == oracle::exact_max_tp(gen.graph).size);
  }
}
