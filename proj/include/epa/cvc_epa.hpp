#pragma once

#include <functional>
#include <optional>
#include <string>

#include "epa/graph.hpp"

namespace epa {

struct ConnectedVCSol {
  VertexSet cover;
  int size = 0;
  std::string trace;
};

/// Calls f on every connected vertex set of size 1..k, each exactly once,
/// in a fixed order (ESU extension from the lowest member).
void for_each_connected_subset(const Graph& g, int k, const std::function<void(const VertexSet&)>& f);

/// Minimum connected vertex cover of size at most `limit` (ties by lex order).
std::optional<VertexSet> small_cvc(const Graph& g, int limit);

ConnectedVCSol cvc_budgeted(const Graph& g, int c);
/// Exact minimum connected vertex cover given a clique z with OPT(G<z>) <= c.
ConnectedVCSol cvc_small_after_contraction(const Graph& g, const VertexSet& z, int c);
/// Size at most OPT_CVC + OPT_SVD.
ConnectedVCSol cvc_split(const Graph& g);

}  // namespace epa
