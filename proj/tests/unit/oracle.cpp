#include <doctest.h>

#include "epa/check.hpp"
#include "epa/error.hpp"
#include "epa/graph_builders.hpp"
#include "epa/oracle.hpp"
#include "support.hpp"

using namespace epa;
using namespace epa::oracle;

TEST_CASE("weighted vertex cover") {
  CHECK(exact_min_wvc(named::path(3), WeightFn::unit(3)).value == 1);
  CHECK(exact_min_wvc(named::cycle(5), WeightFn::unit(5)).value == 3);
  CHECK(exact_min_wvc(named::complete(4), WeightFn::unit(4)).value == 3);
  CHECK(exact_min_wvc(named::path(3), WeightFn({1, 5, 1})).set == VertexSet(3, {0, 2}));
  CHECK_THROWS_AS(exact_min_wvc(named::path(13), WeightFn::unit(13)), BudgetExceeded);
  CHECK_NOTHROW(exact_min_wvc(named::path(13), WeightFn::unit(13), Budget::uniform(13)));
}

TEST_CASE("connected vertex cover") {
  CHECK(exact_min_cvc(named::star(4)).size == 1);
  CHECK(exact_min_cvc(named::path(5)).size == 3);
  CHECK(exact_min_cvc(named::complete(2)).size == 1);
  CHECK_THROWS_AS(exact_min_cvc(named::edgeless(2)), PreconditionError);
}

TEST_CASE("chromatic number") {
  CHECK(exact_chromatic(named::cycle(5)).chi == 3);
  CHECK(exact_chromatic(named::complete(5)).chi == 5);
  CHECK(exact_chromatic(named::cycle(6)).chi == 2);
  CHECK(exact_chromatic(named::petersen()).chi == 3);
  const Coloring c = exact_chromatic(named::petersen());
  CHECK(check::is_proper_coloring(named::petersen(), c.color));
}

TEST_CASE("triangle packing") {
  CHECK(exact_max_tp(named::complete(6)).size == 2);
  CHECK(exact_max_tp(named::cycle(5)).size == 0);
  CHECK(exact_max_tp(disjoint_union(named::complete(3), named::complete(3))).size == 2);
}

TEST_CASE("modulators") {
  CHECK(exact_min_modulator(named::cycle(5), GraphClass::Bipartite).value == 1);
  CHECK(exact_min_modulator(named::path(3), GraphClass::Cluster).value == 1);
  CHECK(exact_min_modulator(named::cycle(5), GraphClass::Split).value == 1);
  CHECK(exact_min_modulator(named::complete(5), GraphClass::Bipartite).value == 3);
  CHECK(exact_min_modulator(named::cycle(5), GraphClass::Cluster).value == 2);
  const WeightFn w({5, 1, 5});
  CHECK(exact_min_modulator(named::path(3), GraphClass::Cluster, &w).set == VertexSet(3, {1}));
}

TEST_CASE("LP relaxation") {
  CHECK(exact_lp_vc(named::complete(2), WeightFn::unit(2)) == 1);
  CHECK(exact_lp_vc(named::complete(3), WeightFn::unit(3)) == Rational(3, 2));
  CHECK(exact_lp_vc(named::star(3), WeightFn::unit(4)) == 1);
}

TEST_CASE("oracles are mutually consistent") {
  SplitMix64 rng(99);
  for (int i = 0; i < 150; ++i) {
    const Graph g = testing::random_graph(rng, 9);
    const WeightFn w = testing::random_weights(rng, g.order());
    const WeightedSet vc = exact_min_wvc(g, w);
    CHECK(check::is_vertex_cover(g, vc.set));
    CHECK(exact_lp_vc(g, w) <= vc.value);
    CHECK(exact_min_modulator(g, GraphClass::Cluster, &w).value <= vc.value);
    CHECK(exact_min_modulator(g, GraphClass::Forest, &w).value <= vc.value);
    int omega = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      int best = 1;
      for (Vertex u : g.neighbors(v))
        for (Vertex x : g.neighbors(v))
          if (u < x && g.adjacent(u, x)) best = 3;
      if (g.degree(v) > 0) best = std::max(best, 2);
      omega = std::max(omega, best);
    }
    CHECK(exact_chromatic(g).chi >= omega);
    CHECK(exact_min_wvc(g, w).set == vc.set);
  }
}
