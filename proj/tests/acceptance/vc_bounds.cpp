// Additive bounds of the vertex cover algorithms against exact optima and modulators.
#include "acceptance/report.hpp"
#include "epa/check.hpp"
#include "epa/oracle.hpp"
#include "epa/vc_epa.hpp"
#include "support.hpp"

using namespace epa;

int main() {
  testing::Criterion crit(2, "vertex cover bounds, 4000 graphs 5 <= n <= 10, unit and rational weights");
  SplitMix64 rng(77);
  const std::pair<FFreeConfig, GraphClass> ffree[] = {{FFreeConfig::cograph(), GraphClass::Cograph},
                                                      {FFreeConfig::cluster(), GraphClass::Cluster},
                                                      {FFreeConfig::cocluster(), GraphClass::Cocluster}};
  const int instances = 4000;
  for (int i = 0; i < instances; ++i) {
    const Graph g = testing::random_graph(rng, 10, 5);
    const bool unit = i % 2 == 0;
    const WeightFn w = unit ? WeightFn::unit(g.order()) : testing::random_weights(rng, g.order());
    const std::string tag = "instance " + std::to_string(i) + (unit ? " unit" : " weighted");
    const Rational opt = oracle::exact_min_wvc(g, w).value;
    auto bounded = [&](const char* alg, const VertexSet& cover, const Rational& bound) {
      crit.check(check::is_vertex_cover(g, cover) && w.total(cover) <= bound,
                 tag + " " + alg + ": " + to_string(w.total(cover)) + " > " + to_string(bound));
    };

    bounded("vc_fvs", vc_fvs(g, w).cover, opt + oracle::exact_min_modulator(g, GraphClass::Forest, &w).value);
    bounded("vc_chordal", vc_chordal(g, w).cover,
            Rational(3, 2) * opt + oracle::exact_min_modulator(g, GraphClass::Chordal, &w).value);
    for (const auto& [cfg, cls] : ffree)
      bounded(("local ratio " + cfg.family).c_str(), vc_local_ratio_ffree(g, w, cfg).cover,
              opt + cfg.alpha_star * oracle::exact_min_modulator(g, cls, &w).value);
    if (unit) bounded("vc_split", vc_split(g).cover, opt + oracle::exact_min_modulator(g, GraphClass::Split).value);
  }
  crit.note("exact rational comparison");
  return crit.finish(300);
}
