// Every algorithm's certificate passes its independent checker on random graphs.
#include <cstdio>

#include "acceptance/report.hpp"
#include "epa/check.hpp"
#include "epa/color_epa.hpp"
#include "epa/cvc_epa.hpp"
#include "epa/pack_epa.hpp"
#include "epa/solvers.hpp"
#include "epa/vc_epa.hpp"
#include "support.hpp"

using namespace epa;

int main() {
  testing::Criterion crit(1, "feasibility suite, 5000 random graphs with n <= 16");
  SplitMix64 rng(20240601);
  const FFreeConfig configs[] = {FFreeConfig::cograph(), FFreeConfig::cluster(), FFreeConfig::cocluster()};
  const int instances = 5000;
  for (int i = 0; i < instances; ++i) {
    const Graph g = testing::random_graph(rng, 16);
    const WeightFn w = i % 2 ? testing::random_weights(rng, g.order()) : WeightFn::unit(g.order());
    const std::string tag = "instance " + std::to_string(i);
    auto cover = [&](const std::string& alg, const VertexSet& c) { crit.check(check::is_vertex_cover(g, c), tag + " " + alg); };
    auto colors = [&](const std::string& alg, const ColoringSol& s) {
      crit.check(check::is_proper_coloring(g, s.color) && static_cast<int>(s.color.size()) == g.order(), tag + " " + alg);
    };

    for (const auto& cfg : configs) {
      const VertexCoverSol s = vc_local_ratio_ffree(g, w, cfg);
      cover("local ratio " + cfg.family, s.cover);
      crit.check(s.weight == w.total(s.cover), tag + " weight bookkeeping");
      crit.check(check::is_independent_set(g, independent_set_from_cover(g, s)), tag + " independent set");
    }
    cover("vc_fvs", vc_fvs(g, w).cover);
    cover("vc_chordal", vc_chordal(g, w).cover);
    cover("vc_split", vc_split(g).cover);
    cover("vc_budgeted_2approx", vc_budgeted_2approx(g, 2).cover);
    cover("vc_2approx", vc_2approx(g, w));
    const HalfIntegralLP lp = lp_half_integral_vc(g, w);
    cover("lp rounding", lp.v1 | lp.vhalf);
    crit.check(check::is_feedback_vertex_set(g, fvs_2approx(g, w)), tag + " fvs_2approx");
    const Matching m = max_matching(g);
    {
      VertexSet used(static_cast<std::size_t>(g.order()));
      bool ok = true;
      for (auto [u, v] : m) {
        ok = ok && g.adjacent(u, v) && !used.contains(u) && !used.contains(v);
        used.insert(u);
        used.insert(v);
      }
      crit.check(ok, tag + " matching");
    }

    colors("class oracle bipartite", color_with_class_oracle(g, ClassColoringOracle::bipartite()));
    colors("class oracle degeneracy", color_with_class_oracle(g, ClassColoringOracle::degeneracy_six()));
    colors("degeneracy", color_degeneracy(g));
    colors("greedy mis", color_greedy_mis(g));
    colors("p3k1", color_p3k1free(g));

    crit.check(check::is_triangle_packing(g, tp_maximal(g).triangles), tag + " tp_maximal");
    crit.check(check::is_triangle_packing(g, tp_3maximal(g).triangles), tag + " tp_3maximal");

    // Connected cover algorithms run on the component of vertex 0.
    const Subgraph comp = induced_subgraph(g, connected_components(g).front());
    const Graph& h = comp.graph;
    auto connected = [&](const std::string& alg, const VertexSet& c) {
      crit.check(check::is_connected_vertex_cover(h, c), tag + " " + alg);
    };
    connected("cvc_split", cvc_split(h).cover);
    connected("cvc_budgeted", cvc_budgeted(h, 4).cover);
    if (h.edge_count() > 0) {
      connected("cvc_savage", cvc_savage(h));
      const VertexSet z = two_maximal_clique(h);
      if (auto x = small_cvc(contract_with_pendant(h, z).graph, 3))
        connected("cvc_small_after_contraction", cvc_small_after_contraction(h, z, 3).cover);
    }
  }
  crit.note(std::to_string(instances) + " graphs");
  return crit.finish(120);
}
