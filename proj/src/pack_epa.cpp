#include "epa/pack_epa.hpp"

#include <algorithm>
#include <optional>

namespace epa {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<VertexSet> triangles_within(const Graph& g, const VertexSet& pool) {
  const auto n = idx(g.order());
  std::vector<VertexSet> out;
  for (Vertex a = pool.first(); a >= 0; a = pool.next(a + 1)) {
    const VertexSet na = g.neighborhood(a) & pool;
    for (Vertex b = na.next(a + 1); b >= 0; b = na.next(b + 1)) {
      const VertexSet nab = na & g.neighborhood(b);
      for (Vertex c = nab.next(b + 1); c >= 0; c = nab.next(c + 1)) out.push_back(VertexSet(n, {a, b, c}));
    }
  }
  return out;
}

// First (in list order) choice of `need` pairwise disjoint triangles.
bool pick_disjoint(const std::vector<VertexSet>& tris, std::size_t from, int need, VertexSet& used,
                   std::vector<VertexSet>& chosen) {
  if (need == 0) return true;
  for (std::size_t i = from; i < tris.size(); ++i) {
    if (tris[i].intersects(used)) continue;
    used |= tris[i];
    chosen.push_back(tris[i]);
    if (pick_disjoint(tris, i + 1, need - 1, used, chosen)) return true;
    chosen.pop_back();
    used -= tris[i];
  }
  return false;
}

VertexSet covered_by(const Graph& g, const std::vector<VertexSet>& packing) {
  VertexSet s(idx(g.order()));
  for (const auto& t : packing) s |= t;
  return s;
}

// Applies the first improving swap found; false when none exists.
bool improve(const Graph& g, std::vector<VertexSet>& packing) {
  const VertexSet free = covered_by(g, packing).complement();
  const std::size_t p = packing.size();
  for (int r = 0; r <= 2; ++r) {
    std::vector<std::vector<std::size_t>> outs;
    if (r == 0) outs.push_back({});
    if (r == 1)
      for (std::size_t i = 0; i < p; ++i) outs.push_back({i});
    if (r == 2)
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) outs.push_back({i, j});
    for (const auto& out : outs) {
      VertexSet pool = free;
      for (std::size_t i : out) pool |= packing[i];
      const auto tris = triangles_within(g, pool);
      if (static_cast<int>(tris.size()) < r + 1) continue;
      VertexSet used(idx(g.order()));
      std::vector<VertexSet> chosen;
      if (!pick_disjoint(tris, 0, r + 1, used, chosen)) continue;
      for (auto it = out.rbegin(); it != out.rend(); ++it) packing.erase(packing.begin() + static_cast<std::ptrdiff_t>(*it));
      packing.insert(packing.end(), chosen.begin(), chosen.end());
      return true;
    }
  }
  return false;
}

TrianglePackingSol finish(std::vector<VertexSet> packing) {
  std::sort(packing.begin(), packing.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  const int size = static_cast<int>(packing.size());
  return {std::move(packing), size};
}

}  // namespace

TrianglePackingSol tp_maximal(const Graph& g) {
  const auto n = idx(g.order());
  VertexSet free = g.vertices();
  std::vector<VertexSet> packing;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!free.contains(v)) continue;
    const VertexSet nv = g.neighborhood(v) & free;
    for (Vertex a = nv.first(); a >= 0; a = nv.next(a + 1)) {
      const Vertex b = (nv & g.neighborhood(a)).next(a + 1);
      if (b < 0) continue;
      packing.push_back(VertexSet(n, {v, a, b}));
      free.erase(v);
      free.erase(a);
      free.erase(b);
      break;
    }
  }
  return finish(std::move(packing));
}

TrianglePackingSol tp_3maximal(const Graph& g) {
  std::vector<VertexSet> packing = tp_maximal(g).triangles;
  while (improve(g, packing)) {
  }
  return finish(std::move(packing));
}

bool has_improving_swap(const Graph& g, const std::vector<VertexSet>& packing) {
  const auto all = triangles_within(g, g.vertices());
  const std::size_t p = packing.size();
  for (int r = 0; r <= 2 && static_cast<std::size_t>(r) <= p; ++r) {
    std::vector<std::vector<std::size_t>> outs;
    if (r == 0) outs.push_back({});
    if (r == 1)
      for (std::size_t i = 0; i < p; ++i) outs.push_back({i});
    if (r == 2)
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) outs.push_back({i, j});
    for (const auto& out : outs) {
      VertexSet blocked(idx(g.order()));
      for (std::size_t i = 0; i < p; ++i)
        if (std::find(out.begin(), out.end(), i) == out.end()) blocked |= packing[i];
      VertexSet used = blocked;
      std::vector<VertexSet> chosen;
      if (pick_disjoint(all, 0, r + 1, used, chosen)) return true;
    }
  }
  return false;
}

}  // namespace epa
