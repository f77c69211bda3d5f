#include "epa/check.hpp"

#include <algorithm>
#include <numeric>

namespace epa::check {

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (auto [u, v] : g.edges())
    if (!s.contains(u) && !s.contains(v)) return false;
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) return false;
  return true;
}

bool is_connected_vertex_cover(const Graph& g, const VertexSet& s) {
  if (!is_vertex_cover(g, s)) return false;
  if (s.empty()) return g.edge_count() == 0;
  return induces_connected(g, s);
}

bool is_proper_coloring(const Graph& g, std::span<const int> color) {
  if (color.size() != static_cast<std::size_t>(g.order())) return false;
  int k = 0;
  for (int c : color) {
    if (c < 1) return false;
    k = std::max(k, c);
  }
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  for (int c : color) used[static_cast<std::size_t>(c)] = true;
  for (int c = 1; c <= k; ++c)
    if (!used[static_cast<std::size_t>(c)]) return false;
  for (auto [u, v] : g.edges())
    if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return false;
  return true;
}

bool is_triangle_packing(const Graph& g, const std::vector<VertexSet>& triangles) {
  VertexSet used(static_cast<std::size_t>(g.order()));
  for (const auto& t : triangles) {
    if (t.universe() != used.universe() || t.size() != 3 || !is_clique(g, t)) return false;
    if (t.intersects(used)) return false;
    used |= t;
  }
  return true;
}

bool is_forest(const Graph& g) {
  // Union-find: an edge inside one tree closes a cycle.
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (auto [u, v] : g.edges()) {
    Vertex a = find(u);
    Vertex b = find(v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

bool is_feedback_vertex_set(const Graph& g, const VertexSet& s) { return is_forest(delete_vertices(g, s).graph); }

bool is_cycle(const Graph& g, std::span<const Vertex> order) {
  if (order.size() < 3) return false;
  VertexSet seen(static_cast<std::size_t>(g.order()));
  for (Vertex v : order) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!g.adjacent(order[i], order[(i + 1) % order.size()])) return false;
  return true;
}

bool is_hole(const Graph& g, std::span<const Vertex> order) {
  if (order.size() < 4 || !is_cycle(g, order)) return false;
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.adjacent(order[i], order[j])) return false;
    }
  return true;
}

}  // namespace epa::check
