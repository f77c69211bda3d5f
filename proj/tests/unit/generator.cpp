#include <doctest.h>

#include "epa/error.hpp"
#include "epa/generator.hpp"
#include "epa/io.hpp"

using namespace epa;

TEST_CASE("planted modulators verify for every supported class") {
  for (GraphClass c : all_graph_classes()) {
    if (c == GraphClass::CoTriangleFree) {
      CHECK_THROWS_AS(generate({c, 5, 0, 500, 1}), UnsupportedError);
      continue;
    }
    for (int k = 0; k <= 3; ++k)
      for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Generated g = generate({c, 9, k, 500, seed});
        CHECK(g.graph.order() == 9 + k);
        CHECK(static_cast<int>(g.planted.size()) == k);
        CHECK(is_member(delete_vertices(g.graph, g.planted).graph, c));
      }
  }
}

TEST_CASE("generator examples") {
  const Generated cl = generate({GraphClass::Cluster, 9, 0, 500, 7});
  CHECK(is_member(cl.graph, GraphClass::Cluster));
  const Generated bp = generate({GraphClass::Bipartite, 8, 2, 500, 1});
  CHECK(is_member(delete_vertices(bp.graph, bp.planted).graph, GraphClass::Bipartite));
}

TEST_CASE("same seed, same bytes") {
  const GeneratorSpec spec{GraphClass::Chordal, 12, 3, 400, 12345};
  const Generated a = generate(spec), b = generate(spec);
  CHECK(serialize_instance({a.graph, WeightFn::unit(15)}) == serialize_instance({b.graph, WeightFn::unit(15)}));
  CHECK(a.planted == b.planted);
  const Generated c = generate({GraphClass::Chordal, 12, 3, 400, 12346});
  CHECK_FALSE(c.graph == a.graph);
}
