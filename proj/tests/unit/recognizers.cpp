#include <doctest.h>

#include "epa/graph_builders.hpp"
#include "epa/recognizers.hpp"
#include "support.hpp"

using namespace epa;

namespace {

void expect(const Graph& g, GraphClass c, bool member) {
  const Recognition r = recognize(g, c);
  CHECK(r.member == member);
  CHECK(is_member(g, c) == member);
  CHECK(witness_valid(g, r));
}

}  // namespace

TEST_CASE("membership on small named graphs") {
  expect(named::cycle(5), GraphClass::Bipartite, false);
  expect(named::cycle(6), GraphClass::Bipartite, true);
  expect(named::cycle(4), GraphClass::Chordal, false);
  expect(named::complete(5), GraphClass::Chordal, true);
  expect(named::path(4), GraphClass::Cograph, false);
  expect(named::complete_multipartite({2, 3, 1}), GraphClass::Cograph, true);
  expect(named::complete_multipartite({2, 3, 1}), GraphClass::Cocluster, true);
  expect(named::path(3), GraphClass::Cluster, false);
  expect(named::path(4), GraphClass::Split, true);
  expect(named::cycle(5), GraphClass::Split, false);
  expect(named::cycle(4), GraphClass::Split, false);
  expect(complement(named::cycle(4)), GraphClass::Split, false);
  expect(named::cycle(6), GraphClass::Cochordal, false);
  expect(named::petersen(), GraphClass::Forest, false);
  expect(named::star(4), GraphClass::Forest, true);
  expect(named::cycle(5), GraphClass::P3K1Free, true);
  expect(disjoint_union(named::path(3), named::edgeless(1)), GraphClass::P3K1Free, false);
  expect(named::complete(3), GraphClass::TriangleFree, false);
  expect(named::edgeless(3), GraphClass::CoTriangleFree, false);
  expect(named::edgeless(0), GraphClass::Split, true);
}

TEST_CASE("patterns and witnesses") {
  const auto p4 = find_pattern(named::path(4), Pattern::P4);
  REQUIRE(p4);
  CHECK(induces_pattern(named::path(4), *p4, Pattern::P4));
  CHECK_FALSE(find_pattern(named::complete(4), Pattern::P3));
  const auto cop3 = find_pattern(disjoint_union(named::complete(2), named::edgeless(1)), Pattern::CoP3);
  REQUIRE(cop3);
  CHECK((*cop3)[2] == 2);
  const auto hole = find_hole(named::cycle(6));
  REQUIRE(hole);
  CHECK(hole->size() == 6);
  CHECK_FALSE(find_hole(named::complete(5)));
  CHECK_THROWS(find_pattern(named::cycle(5), Pattern::Hole));
}

TEST_CASE("cotree evaluates back to the graph") {
  SplitMix64 rng(11);
  int cographs = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::random_graph(rng, 9);
    auto t = build_cotree(g);
    if (auto* tree = std::get_if<Cotree>(&t)) {
      ++cographs;
      CHECK(tree->evaluate() == g);
    } else {
      CHECK(induces_pattern(g, std::get<ForbiddenWitness>(t).vertices, Pattern::P4));
    }
  }
  CHECK(cographs > 0);
}

TEST_CASE("recognizers agree with witnesses on random graphs") {
  SplitMix64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const Graph g = testing::random_graph(rng, 10);
    for (GraphClass c : all_graph_classes()) {
      const Recognition r = recognize(g, c);
      CHECK(witness_valid(g, r));
      CHECK(is_member(g, c) == r.member);
    }
  }
}

TEST_CASE("elimination order") {
  const Graph g = named::complete(4);
  const auto order = mcs_elimination_order(g);
  CHECK(is_perfect_elimination_order(g, order));
  CHECK_FALSE(is_perfect_elimination_order(named::cycle(4), std::vector<Vertex>{0, 1, 2, 3}));
}
