// Coloring bounds in terms of chi(G - M) and |M| for oracle-minimum modulators.
#include "acceptance/report.hpp"
#include "epa/check.hpp"
#include "epa/color_epa.hpp"
#include "epa/oracle.hpp"
#include "support.hpp"

using namespace epa;

int main() {
  testing::Criterion crit(4, "coloring bounds, 3000 graphs 5 <= n <= 10 (modulator rows n <= 9)");
  SplitMix64 rng(9001);
  const int instances = 3000;
  for (int i = 0; i < instances; ++i) {
    const std::string tag = "instance " + std::to_string(i);
    const Graph g = testing::random_graph(rng, i % 2 ? 10 : 9, 5);
    auto valid = [&](const ColoringSol& s) { return check::is_proper_coloring(g, s.color); };

    const ColoringSol oct = color_with_class_oracle(g, ClassColoringOracle::bipartite());
    const Rational k_oct = oracle::exact_min_modulator(g, GraphClass::Bipartite).value;
    crit.check(valid(oct) && oct.colors_used <= 2 + k_oct, tag + " class oracle");
    if (g.order() > 9) continue;

    // chi(G - M) + |M| style bounds.
    auto side = [&](GraphClass c) {
      const oracle::WeightedSet m = oracle::exact_min_modulator(g, c);
      const Graph rest = delete_vertices(g, m.set).graph;
      return std::pair<int, int>{oracle::exact_chromatic(rest).chi, static_cast<int>(m.set.size())};
    };
    {
      const auto [chi, k] = side(GraphClass::Chordal);
      const ColoringSol s = color_degeneracy(g);
      crit.check(valid(s) && s.colors_used <= chi + k, tag + " degeneracy");
    }
    const ColoringSol mis = color_greedy_mis(g);
    {
      const auto [chi, k] = side(GraphClass::Cograph);
      crit.check(valid(mis) && mis.colors_used <= chi + k, tag + " greedy mis, cograph modulator");
    }
    {
      const auto [chi, k] = side(GraphClass::Cochordal);
      crit.check(valid(mis) && mis.colors_used <= std::max(k, 2 * chi + k - 1), tag + " greedy mis, cochordal modulator");
    }
    {
      const auto [chi, k] = side(GraphClass::P3K1Free);
      const ColoringSol s = color_p3k1free(g);
      crit.check(valid(s) && s.colors_used <= chi + k, tag + " p3k1");
    }
  }
  return crit.finish();
}
