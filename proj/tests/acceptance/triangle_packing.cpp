// Packing bounds against cluster / cocluster modulators, and exactness on coclusters.
#include "acceptance/report.hpp"
#include "epa/check.hpp"
#include "epa/generator.hpp"
#include "epa/oracle.hpp"
#include "epa/pack_epa.hpp"
#include "support.hpp"

using namespace epa;

int main() {
  testing::Criterion crit(6, "triangle packing, 2000 random graphs 5 <= n <= 10 and 500 coclusters n <= 12");
  SplitMix64 rng(606);
  for (int i = 0; i < 2000; ++i) {
    const Graph g = testing::random_graph(rng, 10, 5);
    const std::string tag = "instance " + std::to_string(i);
    const int opt = oracle::exact_max_tp(g).size;
    const TrianglePackingSol a = tp_maximal(g);
    const TrianglePackingSol b = tp_3maximal(g);
    crit.check(check::is_triangle_packing(g, a.triangles) &&
                   a.size >= opt - oracle::exact_min_modulator(g, GraphClass::Cluster).value,
               tag + " tp_maximal");
    crit.check(check::is_triangle_packing(g, b.triangles) &&
                   b.size >= opt - oracle::exact_min_modulator(g, GraphClass::Cocluster).value,
               tag + " tp_3maximal");
  }
  for (int i = 0; i < 500; ++i) {
    const int n = 3 + i % 10;
    const Generated gen = generate({GraphClass::Cocluster, n, 0, 500, 5000 + static_cast<std::uint64_t>(i)});
    const TrianglePackingSol s = tp_3maximal(gen.graph);
    crit.check(check::is_triangle_packing(gen.graph, s.triangles) && s.size == oracle::exact_max_tp(gen.graph).size,
               "cocluster seed " + std::to_string(5000 + i));
  }
  return crit.finish();
}
