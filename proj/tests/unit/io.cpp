#include <doctest.h>

#include "epa/error.hpp"
#include "epa/generator.hpp"
#include "epa/graph_builders.hpp"
#include "epa/io.hpp"

using namespace epa;

TEST_CASE("parse minimal instances") {
  const Instance k2 = parse_instance("p epa 2 1\ne 1 2\n");
  CHECK(k2.graph == named::complete(2));
  CHECK(k2.weights.is_unit());
  const Instance w = parse_instance("c weighted\np epa 2 0\nv 1 3/2\n");
  CHECK(w.weights[0] == Rational(3, 2));
  CHECK(w.weights[1] == 1);
  CHECK(parse_instance("p epa 0 0").graph.order() == 0);
}

TEST_CASE("parse errors carry the line") {
  auto line_of = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.line());
    }
    return -1L;
  };
  CHECK(line_of("p epa 2 1\ne 1 1\n") == 2);
  CHECK(line_of("p epa 2 2\ne 1 2\ne 2 1\n") == 3);
  CHECK(line_of("p epa 2 1\ne 1 3\n") == 2);
  CHECK(line_of("p epa 2 0\nv 1 -1\n") == 2);
  CHECK(line_of("p epa 2 0\nv 1 1/0\n") == 2);
  CHECK(line_of("p epa 2 0\nv 1 1\nv 1 2\n") == 3);
  CHECK(line_of("e 1 2\n") == 1);
  CHECK(line_of("p epa 2 0\nx\n") == 2);
  CHECK(line_of("p epa 2 2\ne 1 2\n") == 0);
  CHECK(line_of("") == 0);
}

TEST_CASE("round trip") {
  Instance inst{named::petersen(), WeightFn({1, Rational(1, 3), 2, 1, 0, 1, 1, 7, 1, Rational(9, 4)})};
  const Instance back = parse_instance(serialize_instance(inst, {"hello"}));
  CHECK(back.graph == inst.graph);
  CHECK(back.weights == inst.weights);
  for (GraphClass c : {GraphClass::Cluster, GraphClass::Split, GraphClass::Chordal, GraphClass::Cochordal}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Generated g = generate({c, 9, 2, 500, seed});
      const Instance i{g.graph, WeightFn::unit(g.graph.order())};
      const std::string text = serialize_instance(i);
      CHECK(serialize_instance(parse_instance(text)) == text);
    }
  }
}
