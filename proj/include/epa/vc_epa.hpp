#pragma once

#include <functional>
#include <optional>
#include <string>

#include "epa/graph.hpp"
#include "epa/recognizers.hpp"
#include "epa/weight.hpp"

namespace epa {

struct VertexCoverSol {
  VertexSet cover;
  Rational weight;
  std::string trace;
  int depth = 0;
};

/// Forbidden family for the local-ratio scheme: a finder for one induced copy
/// and an exact solver for graphs free of it.
struct FFreeConfig {
  std::string family;
  int alpha_star = 2;
  std::function<std::optional<VertexSet>(const Graph&)> find;
  std::function<VertexSet(const Graph&, const WeightFn&)> solve;

  static FFreeConfig cluster();    // P3
  static FFreeConfig cocluster();  // co-P3
  static FFreeConfig cograph();    // P4
};

VertexCoverSol vc_local_ratio_ffree(const Graph& g, const WeightFn& w, const FFreeConfig& cfg);
VertexCoverSol vc_fvs(const Graph& g, const WeightFn& w);
VertexCoverSol vc_chordal(const Graph& g, const WeightFn& w);

/// Clique admitting no swap of j <= 1 members for j+1 <= 2 outsiders.
VertexSet two_maximal_clique(const Graph& g);

/// Best Y + 2-approximation(G - Y) over all |Y| <= c (unit weights).
VertexCoverSol vc_budgeted_2approx(const Graph& g, int c);
/// Unweighted; size at most OPT_VC + OPT_SVD.
VertexCoverSol vc_split(const Graph& g);

/// V minus a feasible cover. Throws PreconditionError when the cover misses an edge.
VertexSet independent_set_from_cover(const Graph& g, const VertexCoverSol& sol);

}  // namespace epa
