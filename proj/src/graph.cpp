#include "epa/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "epa/error.hpp"

namespace epa {

Graph::Graph(int n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  rows_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop");
    if (rows_[static_cast<std::size_t>(u)].contains(v)) throw PreconditionError("parallel edge");
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
    ++m_;
  }
  for (std::size_t v = 0; v < adj_.size(); ++v) adj_[v] = rows_[v].members();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = neighborhood(v);
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Subgraph::lift(const VertexSet& s, std::size_t parent_universe) const {
  VertexSet out(parent_universe);
  s.for_each([&](Vertex v) { out.insert(to_parent[static_cast<std::size_t>(v)]); });
  return out;
}

VertexSet Contraction::lift(const VertexSet& s, const VertexSet& y) const {
  VertexSet out(y.universe());
  s.for_each([&](Vertex v) {
    if (v == contracted)
      out |= y;
    else if (v != leaf)
      out.insert(to_parent[static_cast<std::size_t>(v)]);
  });
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  Subgraph out;
  out.to_parent = s.members();
  std::vector<Vertex> to_child(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    to_child[static_cast<std::size_t>(out.to_parent[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (Vertex w : g.neighbors(out.to_parent[i])) {
      Vertex j = to_child[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& s) { return induced_subgraph(g, s.complement()); }

Contraction contract_with_pendant(const Graph& g, const VertexSet& y) {
  if (y.empty()) throw PreconditionError("contraction set must be nonempty");
  Contraction out;
  out.to_parent = (y.complement()).members();
  const auto kept = static_cast<Vertex>(out.to_parent.size());
  out.contracted = kept;
  out.leaf = kept + 1;
  std::vector<Vertex> to_child(static_cast<std::size_t>(g.order()), out.contracted);
  for (Vertex i = 0; i < kept; ++i) to_child[static_cast<std::size_t>(out.to_parent[static_cast<std::size_t>(i)])] = i;

  VertexSet outside_nbrs(static_cast<std::size_t>(g.order()));
  y.for_each([&](Vertex v) { outside_nbrs |= g.neighborhood(v); });
  outside_nbrs -= y;

  std::vector<Edge> edges;
  for (Vertex i = 0; i < kept; ++i)
    for (Vertex w : g.neighbors(out.to_parent[static_cast<std::size_t>(i)])) {
      Vertex j = to_child[static_cast<std::size_t>(w)];
      if (j != out.contracted && j > i) edges.emplace_back(i, j);
    }
  outside_nbrs.for_each([&](Vertex w) { edges.emplace_back(to_child[static_cast<std::size_t>(w)], out.contracted); });
  edges.emplace_back(out.contracted, out.leaf);
  out.graph = Graph(kept + 2, edges);
  out.to_parent.push_back(-1);
  out.to_parent.push_back(-1);
  return out;
}

Degeneracy degeneracy_order(const Graph& g) {
  Degeneracy out;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(g.degree(v), v);
  }
  out.removal_order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = true;
    out.removal_order.push_back(v);
    out.value = std::max(out.value, d);
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (removed[wi]) continue;
      queue.erase({deg[wi], w});
      queue.emplace(--deg[wi], w);
    }
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> parts;
  VertexSet unseen = within;
  for (Vertex s = unseen.first(); s >= 0; s = unseen.next(s)) {
    VertexSet part(static_cast<std::size_t>(g.order()));
    std::deque<Vertex> queue{s};
    unseen.erase(s);
    part.insert(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v))
        if (unseen.contains(w)) {
          unseen.erase(w);
          part.insert(w);
          queue.push_back(w);
        }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, const VertexSet& s) { return connected_components(g, s).size() <= 1; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph full_join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = disjoint_union(a, b).edges();
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) edges.emplace_back(u, v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw PreconditionError("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(g.order(), edges);
}

}  // namespace epa
