#include <doctest.h>

#include "epa/check.hpp"
#include "epa/cvc_epa.hpp"
#include "epa/error.hpp"
#include "epa/generator.hpp"
#include "epa/graph_builders.hpp"
#include "epa/oracle.hpp"
#include "epa/vc_epa.hpp"
#include "support.hpp"

using namespace epa;

TEST_CASE("connected subsets are enumerated once each") {
  const Graph g = named::cycle(5);
  int count = 0;
  std::vector<VertexSet> seen;
  for_each_connected_subset(g, 5, [&](const VertexSet& s) {
    CHECK(induces_connected(g, s));
    for (const auto& t : seen) CHECK_FALSE(t == s);
    seen.push_back(s);
    ++count;
  });
  // 5 singletons, 5 paths each of 2, 3 and 4 vertices, plus the whole cycle.
  CHECK(count == 21);
}

TEST_CASE("small connected covers") {
  CHECK(small_cvc(named::path(5), 2) == std::nullopt);
  CHECK(small_cvc(named::path(5), 3)->size() == 3);
  CHECK(small_cvc(named::edgeless(1), 0)->empty());
}

TEST_CASE("budgeted connected cover") {
  CHECK_THROWS_AS(cvc_budgeted(named::edgeless(2), 1), PreconditionError);
  CHECK(cvc_budgeted(named::star(4), 1).size == 1);
  SplitMix64 rng(23);
  for (int i = 0; i < 120; ++i) {
    const Graph g = testing::random_connected(rng, 9);
    const int opt = oracle::exact_min_cvc(g).size;
    const int vc = static_cast<int>(oracle::exact_min_wvc(g, WeightFn::unit(g.order())).value.get_num().get_si());
    for (int c : {0, 2, 4}) {
      const ConnectedVCSol s = cvc_budgeted(g, c);
      CHECK(check::is_connected_vertex_cover(g, s.cover));
      CHECK(s.size <= std::max(opt, opt + vc - c));
    }
  }
}

TEST_CASE("exact solution after clique contraction") {
  CHECK(cvc_small_after_contraction(named::complete(4), VertexSet::full(4), 3).size == 3);
  const ConnectedVCSol p4 = cvc_small_after_contraction(named::path(4), VertexSet(4, {1, 2}), 3);
  CHECK(p4.cover == VertexSet(4, {1, 2}));
  CHECK(cvc_small_after_contraction(named::complete(6), VertexSet::full(6), 1).size == 5);
  CHECK_THROWS_AS(cvc_small_after_contraction(named::path(4), VertexSet(4, {0, 2}), 3), PreconditionError);
  SplitMix64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_connected(rng, 9);
    if (g.edge_count() == 0) continue;
    const VertexSet z = two_maximal_clique(g);
    const Contraction h = contract_with_pendant(g, z);
    const int c = oracle::exact_min_cvc(h.graph).size;
    const ConnectedVCSol s = cvc_small_after_contraction(g, z, c);
    CHECK(check::is_connected_vertex_cover(g, s.cover));
    CHECK(s.size == oracle::exact_min_cvc(g).size);
  }
}

TEST_CASE("split-modulator connected cover") {
  CHECK(cvc_split(named::path(4)).size == 2);
  CHECK(cvc_split(named::edgeless(1)).size == 0);
  CHECK_THROWS_AS(cvc_split(named::edgeless(3)), PreconditionError);
  SplitMix64 rng(31);
  for (int i = 0; i < 150; ++i) {
    const Graph g = testing::random_connected(rng, 9);
    const ConnectedVCSol s = cvc_split(g);
    CHECK(check::is_connected_vertex_cover(g, s.cover));
    CHECK(s.size <= oracle::exact_min_cvc(g).size + oracle::exact_min_modulator(g, GraphClass::Split).value);
  }
}

TEST_CASE("contracting a clique through a split modulator can keep a C4") {
  // 4-cycle 0-2-3-4 with pendant 1 at 0: M = {0}, Z = {0, 1} meets M, yet
  // G<Z> still contains the 4-cycle.
  const Graph g(5, {{0, 1}, {0, 2}, {0, 4}, {2, 3}, {3, 4}});
  const VertexSet z = two_maximal_clique(g);
  CHECK(z == VertexSet(5, {0, 1}));
  const auto svd = oracle::exact_min_modulator(g, GraphClass::Split);
  CHECK(svd.value == 1);
  CHECK(svd.set.intersects(z));
  const Contraction h = contract_with_pendant(g, z);
  CHECK(oracle::exact_min_modulator(h.graph, GraphClass::Split).value == 1);
}

TEST_CASE("clique contraction lemmas") {
  SplitMix64 rng(37);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_connected(rng, 9);
    const VertexSet z = two_maximal_clique(g);
    if (z.size() < 2) continue;
    const auto svd = oracle::exact_min_modulator(g, GraphClass::Split);
    if (!svd.set.intersects(z)) continue;
    const Contraction h = contract_with_pendant(g, z);
    CHECK(oracle::exact_min_cvc(h.graph).size <= oracle::exact_min_cvc(g).size - static_cast<int>(z.size()) + 2);
    ++tested;
  }
  CHECK(tested > 10);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Generated gen = generate({GraphClass::Split, 12, 0, 500, seed});
    if (gen.graph.edge_count() == 0) continue;
    const VertexSet z = two_maximal_clique(gen.graph);
    const Contraction h = contract_with_pendant(gen.graph, z);
    CHECK(oracle::exact_min_wvc(h.graph, WeightFn::unit(h.graph.order())).value <= 2);
  }
}
