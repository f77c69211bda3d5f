#include <doctest.h>

#include "epa/check.hpp"
#include "epa/error.hpp"
#include "epa/graph.hpp"
#include "epa/graph_builders.hpp"
#include "epa/weight.hpp"

using namespace epa;

TEST_CASE("vertex set algebra") {
  VertexSet a(70, {1, 5, 69});
  VertexSet b(70, {5, 6});
  CHECK((a | b).size() == 4);
  CHECK((a & b).members() == std::vector<Vertex>{5});
  CHECK((a - b).members() == std::vector<Vertex>{1, 69});
  CHECK(a.complement().size() == 67);
  CHECK(a.next(6) == 69);
  CHECK(a.next(70) == -1);
  CHECK(VertexSet(3, {0, 2}).is_subset_of(VertexSet::full(3)));
  CHECK(lex_less(VertexSet(4, {0, 3}), VertexSet(4, {1, 2})));
  CHECK(lex_less(VertexSet(4, {0}), VertexSet(4, {0, 1})));
}

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), PreconditionError);
  Graph g(3, {{2, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(g.degree(2) == 2);
}

TEST_CASE("complement and named graphs") {
  CHECK(complement(named::complete(5)).edge_count() == 0);
  CHECK(complement(named::cycle(5)) == relabel(named::cycle(5), std::vector<Vertex>{0, 2, 4, 1, 3}));
  CHECK(named::petersen().edge_count() == 15);
  CHECK(named::complete_multipartite({2, 3}).edge_count() == 6);
  CHECK(named::star(3).degree(0) == 3);
  CHECK(named::paw().edge_count() == 4);
}

TEST_CASE("induced subgraph and lift") {
  const Graph g = named::cycle(6);
  const Subgraph s = induced_subgraph(g, VertexSet(6, {1, 2, 3, 5}));
  CHECK(s.graph.order() == 4);
  CHECK(s.graph.edge_count() == 2);
  CHECK(s.lift(VertexSet(4, {0, 3}), 6) == VertexSet(6, {1, 5}));
  CHECK(delete_vertices(g, VertexSet(6, {0})).graph == named::path(5));
}

TEST_CASE("contraction with pendant") {
  const Graph p4 = named::path(4);
  const Contraction c = contract_with_pendant(p4, VertexSet(4, {1, 2}));
  CHECK(c.graph.order() == 4);
  CHECK(c.graph.degree(c.leaf) == 1);
  CHECK(c.graph.adjacent(c.leaf, c.contracted));
  CHECK(c.graph.degree(c.contracted) == 3);
  CHECK(c.lift(VertexSet(4, {c.contracted, c.leaf}), VertexSet(4, {1, 2})) == VertexSet(4, {1, 2}));
}

TEST_CASE("degeneracy and components") {
  CHECK(degeneracy_order(named::complete(4)).value == 3);
  CHECK(degeneracy_order(named::path(6)).value == 1);
  CHECK(degeneracy_order(named::petersen()).value == 3);
  const Graph g = disjoint_union(named::path(3), named::complete(2));
  CHECK(connected_components(g).size() == 2);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(full_join(named::edgeless(2), named::edgeless(2))));
  CHECK(induces_connected(g, VertexSet(5, {0, 1})));
  CHECK_FALSE(induces_connected(g, VertexSet(5, {0, 2})));
}

TEST_CASE("weights") {
  WeightFn w({Rational(1, 2), Rational(3), Rational(2, 4)});
  CHECK(w[2] == Rational(1, 2));
  CHECK(to_string(w[2]) == "1/2");
  CHECK(w.total() == 4);
  CHECK(w.total(VertexSet(3, {0, 2})) == 1);
  CHECK(WeightFn::unit(3).is_unit());
  CHECK(w.restrict(std::vector<Vertex>{1}).values() == std::vector<Rational>{3});
}

TEST_CASE("checkers") {
  const Graph c5 = named::cycle(5);
  CHECK(check::is_vertex_cover(c5, VertexSet(5, {0, 2, 4})));
  CHECK_FALSE(check::is_vertex_cover(c5, VertexSet(5, {0, 2})));
  CHECK(check::is_connected_vertex_cover(c5, VertexSet(5, {0, 1, 2, 3})));
  CHECK_FALSE(check::is_connected_vertex_cover(c5, VertexSet(5, {0, 2, 4})));
  CHECK(check::is_proper_coloring(c5, std::vector<int>{1, 2, 1, 2, 3}));
  CHECK_FALSE(check::is_proper_coloring(c5, std::vector<int>{1, 2, 1, 2, 1}));
  CHECK(check::is_triangle_packing(named::complete(6), {VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})}));
  CHECK_FALSE(check::is_triangle_packing(named::complete(6), {VertexSet(6, {0, 1, 2}), VertexSet(6, {2, 4, 5})}));
  CHECK(check::is_feedback_vertex_set(c5, VertexSet(5, {3})));
  CHECK(check::is_hole(c5, std::vector<Vertex>{0, 1, 2, 3, 4}));
  CHECK(check::is_forest(named::path(4)));
  CHECK(check::is_independent_set(c5, VertexSet(5, {0, 2})));
  CHECK(check::is_clique(named::complete(4), VertexSet::full(4)));
}
