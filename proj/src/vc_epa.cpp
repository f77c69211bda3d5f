#include "epa/vc_epa.hpp"

#include <algorithm>

#include "epa/check.hpp"
#include "epa/error.hpp"
#include "epa/solvers.hpp"

namespace epa {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

VertexCoverSol make_sol(VertexSet cover, const WeightFn& w, std::string trace, int depth = 0) {
  Rational weight = w.total(cover);
  return {std::move(cover), std::move(weight), std::move(trace), depth};
}

// Grows `z` by ascending id while it stays a clique.
void maximalize(const Graph& g, VertexSet& z) {
  VertexSet common = g.vertices();
  z.for_each([&](Vertex v) { common &= g.neighborhood(v); });
  for (Vertex u = common.first(); u >= 0; u = common.next(u + 1)) {
    z.insert(u);
    common &= g.neighborhood(u);
  }
}

// Calls f on each size-k subset of `pool` (ascending member lists, lexicographic order).
template <class F>
void for_each_subset(const std::vector<Vertex>& pool, std::size_t k, F&& f) {
  if (k > pool.size()) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<Vertex> chosen(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[pick[i]];
    f(chosen);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

VertexCoverSol vc_split_rec(const Graph& g, int depth) {
  const auto n = idx(g.order());
  const WeightFn unit = WeightFn::unit(g.order());
  if (g.edge_count() == 0) return make_sol(VertexSet(n), unit, "split:edgeless", depth);

  const VertexSet z = two_maximal_clique(g);
  const Subgraph rest = delete_vertices(g, z);

  // Covers of G - Z with at most one vertex, lifted to g.
  std::vector<VertexSet> small;
  if (rest.graph.edge_count() == 0) small.emplace_back(n);
  for (Vertex x = 0; x < rest.graph.order(); ++x)
    if (check::is_vertex_cover(rest.graph, VertexSet(idx(rest.graph.order()), {x})))
      small.push_back(VertexSet(n, {rest.to_parent[idx(x)]}));
  if (!small.empty()) {
    // Any cover keeps all but at most one clique vertex, so these candidates
    // include an optimum.
    for (const auto& x : small)
      for (Vertex v = z.first(); v >= 0; v = z.next(v + 1)) {
        VertexSet cand = (z | x);
        cand.erase(v);
        if (check::is_vertex_cover(g, cand)) return make_sol(std::move(cand), unit, "split:near-clique", depth);
      }
    return make_sol(z | small.front(), unit, "split:clique", depth);
  }

  VertexSet x1 = rest.lift(vc_budgeted_2approx(rest.graph, 2).cover, n) | z;
  VertexCoverSol rec = vc_split_rec(rest.graph, depth + 1);
  VertexSet x2 = rest.lift(rec.cover, n) | z;
  if (x1.size() < x2.size()) return make_sol(std::move(x1), unit, "split:budgeted", depth);
  return make_sol(std::move(x2), unit, rec.trace, rec.depth);
}

}  // namespace

FFreeConfig FFreeConfig::cluster() {
  return {"P3", 2, [](const Graph& g) { return find_induced(g, Pattern::P3); }, wvc_cluster};
}

FFreeConfig FFreeConfig::cocluster() {
  return {"co-P3", 2, [](const Graph& g) { return find_induced(g, Pattern::CoP3); }, wvc_cograph};
}

FFreeConfig FFreeConfig::cograph() {
  return {"P4", 2, [](const Graph& g) { return find_induced(g, Pattern::P4); }, wvc_cograph};
}

VertexCoverSol vc_local_ratio_ffree(const Graph& g, const WeightFn& w, const FFreeConfig& cfg) {
  const auto n = idx(g.order());
  std::vector<Rational> r = w.values();
  VertexSet alive = g.vertices();
  std::vector<Vertex> removed;
  int rounds = 0;
  VertexSet cover(n);
  for (;; ++rounds) {
    const Subgraph cur = induced_subgraph(g, alive);
    auto s = cfg.find(cur.graph);
    if (!s) {
      std::vector<Rational> rw;
      for (Vertex p : cur.to_parent) rw.push_back(r[idx(p)]);
      cover = cur.lift(cfg.solve(cur.graph, WeightFn(std::move(rw))), n);
      break;
    }
    Vertex zero = -1;
    alive.for_each([&](Vertex v) {
      if (zero < 0 && r[idx(v)] == 0) zero = v;
    });
    if (zero >= 0) {
      alive.erase(zero);
      removed.push_back(zero);
      continue;
    }
    VertexSet found = cur.lift(*s, n);
    Rational lambda = -1;
    found.for_each([&](Vertex v) {
      if (lambda < 0 || r[idx(v)] < lambda) lambda = r[idx(v)];
    });
    found.for_each([&](Vertex v) { r[idx(v)] -= lambda; });
  }
  // Unwind: a removed zero-weight vertex joins only if some edge to a vertex
  // present at its removal is still uncovered.
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const Vertex v = *it;
    alive.insert(v);
    if (!(g.neighborhood(v) & alive).is_subset_of(cover)) cover.insert(v);
  }
  return make_sol(std::move(cover), w, "local-ratio:" + cfg.family, rounds);
}

VertexCoverSol vc_fvs(const Graph& g, const WeightFn& w) {
  const auto n = idx(g.order());
  const HalfIntegralLP lp = lp_half_integral_vc(g, w);
  const Subgraph half = induced_subgraph(g, lp.vhalf);
  const WeightFn hw = w.restrict(half.to_parent);
  const VertexSet f = fvs_2approx(half.graph, hw);
  const Subgraph forest = delete_vertices(half.graph, f);
  const VertexSet t = wvc_forest(forest.graph, hw.restrict(forest.to_parent));
  VertexSet cover = lp.v1 | half.lift(f, n) | half.lift(forest.lift(t, idx(half.graph.order())), n);
  return make_sol(std::move(cover), w, "fvs");
}

VertexCoverSol vc_chordal(const Graph& g, const WeightFn& w) {
  const auto n = idx(g.order());
  std::vector<Rational> r = w.values();
  VertexSet alive = g.vertices();
  VertexSet cover(n);
  std::vector<Vertex> zeroed;
  for (;;) {
    alive.for_each([&](Vertex v) {
      if (r[idx(v)] == 0) {
        alive.erase(v);
        cover.insert(v);
        zeroed.push_back(v);
      }
    });
    const Subgraph cur = induced_subgraph(g, alive);
    auto t = find_pattern(cur.graph, Pattern::Triangle);
    if (!t) break;
    Rational lambda = -1;
    for (Vertex v : *t)
      if (lambda < 0 || r[idx(cur.to_parent[idx(v)])] < lambda) lambda = r[idx(cur.to_parent[idx(v)])];
    for (Vertex v : *t) r[idx(cur.to_parent[idx(v)])] -= lambda;
  }
  const Subgraph residual = induced_subgraph(g, alive);
  std::vector<Rational> rw;
  for (Vertex p : residual.to_parent) rw.push_back(r[idx(p)]);
  cover |= residual.lift(vc_fvs(residual.graph, WeightFn(std::move(rw))).cover, n);
  for (auto it = zeroed.rbegin(); it != zeroed.rend(); ++it) {
    cover.erase(*it);
    if (!g.neighborhood(*it).is_subset_of(cover)) cover.insert(*it);
  }
  return make_sol(std::move(cover), w, "chordal");
}

VertexSet two_maximal_clique(const Graph& g) {
  const auto n = idx(g.order());
  if (n == 0) throw PreconditionError("two_maximal_clique: empty graph");
  Vertex seed = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(seed)) seed = v;
  VertexSet z(n, {seed});
  maximalize(g, z);
  for (bool improved = true; improved;) {
    improved = false;
    for (Vertex out = z.first(); out >= 0 && !improved; out = z.next(out + 1)) {
      VertexSet base = z;
      base.erase(out);
      VertexSet common = g.vertices() - z;
      base.for_each([&](Vertex v) { common &= g.neighborhood(v); });
      for (Vertex a = common.first(); a >= 0 && !improved; a = common.next(a + 1)) {
        Vertex b = (common & g.neighborhood(a)).next(a + 1);
        if (b < 0) continue;
        base.insert(a);
        base.insert(b);
        maximalize(g, base);
        z = std::move(base);
        improved = true;
      }
    }
  }
  return z;
}

VertexCoverSol vc_budgeted_2approx(const Graph& g, int c) {
  const auto n = idx(g.order());
  const WeightFn unit = WeightFn::unit(g.order());
  std::vector<Vertex> pool = g.vertices().members();
  std::optional<VertexSet> best;
  for (int k = 0; k <= c; ++k)
    for_each_subset(pool, static_cast<std::size_t>(k), [&](const std::vector<Vertex>& ys) {
      VertexSet y = VertexSet::from(n, ys);
      const Subgraph rest = delete_vertices(g, y);
      VertexSet cand = y | rest.lift(vc_2approx(rest.graph, WeightFn::unit(rest.graph.order())), n);
      if (!best || cand.size() < best->size()) best = std::move(cand);
    });
  return make_sol(std::move(*best), unit, "budgeted-2approx");
}

VertexCoverSol vc_split(const Graph& g) { return vc_split_rec(g, 0); }

VertexSet independent_set_from_cover(const Graph& g, const VertexCoverSol& sol) {
  if (sol.cover.universe() != idx(g.order()) || !check::is_vertex_cover(g, sol.cover))
    throw PreconditionError("independent_set_from_cover: not a vertex cover");
  return sol.cover.complement();
}

}  // namespace epa
