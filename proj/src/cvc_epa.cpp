#include "epa/cvc_epa.hpp"

#include "epa/check.hpp"
#include "epa/error.hpp"
#include "epa/solvers.hpp"
#include "epa/vc_epa.hpp"

namespace epa {

namespace {

ConnectedVCSol make_sol(VertexSet cover, std::string trace) {
  const int size = static_cast<int>(cover.size());
  return {std::move(cover), size, std::move(trace)};
}

bool better(const VertexSet& a, const std::optional<VertexSet>& best) {
  return !best || a.size() < best->size() || (a.size() == best->size() && lex_less(a, *best));
}

void extend(const Graph& g, int k, Vertex root, VertexSet& sub, VertexSet& reach, VertexSet ext,
            const std::function<void(const VertexSet&)>& f) {
  f(sub);
  if (static_cast<int>(sub.size()) == k) return;
  for (Vertex w = ext.first(); w >= 0; w = ext.first()) {
    ext.erase(w);
    VertexSet next_ext = ext;
    VertexSet fresh = g.neighborhood(w) - reach;
    for (Vertex u = fresh.next(root + 1); u >= 0; u = fresh.next(u + 1)) next_ext.insert(u);
    const VertexSet saved = reach;
    reach |= g.neighborhood(w);
    sub.insert(w);
    extend(g, k, root, sub, reach, std::move(next_ext), f);
    sub.erase(w);
    reach = saved;
  }
}

void require_connected(const Graph& g, const char* who) {
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError(std::string(who) + ": graph must be connected");
}

ConnectedVCSol cvc_split_rec(const Graph& g, int budget) {
  const auto n = static_cast<std::size_t>(g.order());
  if (g.edge_count() == 0) return make_sol(VertexSet(n), "split:trivial");
  const VertexSet z = two_maximal_clique(g);
  const Contraction h = contract_with_pendant(g, z);
  if (small_cvc(h.graph, 3)) {
    ConnectedVCSol s = cvc_small_after_contraction(g, z, 3);
    s.trace = "split:small";
    return s;
  }
  VertexSet x2 = h.lift(cvc_budgeted(h.graph, 4).cover, z);
  if (budget <= 0) return make_sol(std::move(x2), "split:budgeted");
  ConnectedVCSol rec = cvc_split_rec(h.graph, budget - 1);
  VertexSet x1 = h.lift(rec.cover, z);
  if (x2.size() < x1.size()) return make_sol(std::move(x2), "split:budgeted");
  return make_sol(std::move(x1), rec.trace);
}

}  // namespace

void for_each_connected_subset(const Graph& g, int k, const std::function<void(const VertexSet&)>& f) {
  if (k <= 0) return;
  const auto n = static_cast<std::size_t>(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet sub(n, {v});
    VertexSet reach = g.closed_neighborhood(v);
    VertexSet ext(n);
    for (Vertex u : g.neighbors(v))
      if (u > v) ext.insert(u);
    extend(g, k, v, sub, reach, std::move(ext), f);
  }
}

std::optional<VertexSet> small_cvc(const Graph& g, int limit) {
  const auto n = static_cast<std::size_t>(g.order());
  if (g.edge_count() == 0) return VertexSet(n);
  std::optional<VertexSet> best;
  for_each_connected_subset(g, limit, [&](const VertexSet& s) {
    if (check::is_vertex_cover(g, s) && better(s, best)) best = s;
  });
  return best;
}

ConnectedVCSol cvc_budgeted(const Graph& g, int c) {
  require_connected(g, "cvc_budgeted");
  const auto n = static_cast<std::size_t>(g.order());
  if (g.edge_count() == 0) return make_sol(VertexSet(n), "budgeted");
  std::optional<VertexSet> best;
  for_each_connected_subset(g, c + 1, [&](const VertexSet& y) {
    if (static_cast<int>(y.size()) <= c) {
      if (check::is_vertex_cover(g, y) && better(y, best)) best = y;
      return;
    }
    const Contraction h = contract_with_pendant(g, y);
    VertexSet x = h.lift(cvc_savage(h.graph), y);
    if (better(x, best)) best = std::move(x);
  });
  return make_sol(std::move(*best), "budgeted");
}

ConnectedVCSol cvc_small_after_contraction(const Graph& g, const VertexSet& z, int c) {
  require_connected(g, "cvc_small_after_contraction");
  if (z.empty() || !check::is_clique(g, z)) throw PreconditionError("cvc_small_after_contraction: z must be a nonempty clique");
  const auto n = static_cast<std::size_t>(g.order());
  if (g.edge_count() == 0) return make_sol(VertexSet(n), "small");

  const Contraction h = contract_with_pendant(g, z);
  auto xz = small_cvc(h.graph, c);
  if (!xz) throw PreconditionError("cvc_small_after_contraction: contracted optimum exceeds the bound");
  std::optional<VertexSet> best = h.lift(*xz, z);
  // An optimum misses at most one clique vertex u; it contains Z - u.
  for (Vertex u = z.first(); u >= 0; u = z.next(u + 1)) {
    VertexSet rest = z;
    rest.erase(u);
    std::optional<VertexSet> x;
    if (rest.empty()) {
      x = small_cvc(g, c + 1);
    } else {
      const Contraction hu = contract_with_pendant(g, rest);
      if (auto xu = small_cvc(hu.graph, c + 1)) x = hu.lift(*xu, rest);
    }
    if (x && x->size() < best->size()) best = std::move(x);
  }
  return make_sol(std::move(*best), "small");
}

ConnectedVCSol cvc_split(const Graph& g) {
  require_connected(g, "cvc_split");
  return cvc_split_rec(g, g.order());
}

}  // namespace epa
