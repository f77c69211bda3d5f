#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "epa/vertex_set.hpp"

namespace epa {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Keeps both sorted neighbor lists and a bitset row per vertex; the rows
/// make adjacency tests and neighborhood intersections cheap.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws PreconditionError on self-loops, repeated edges, or ids out of range.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  const VertexSet& neighborhood(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
  VertexSet closed_neighborhood(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(adj_.size()); }
  VertexSet empty_set() const { return VertexSet(adj_.size()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> rows_;
  std::size_t m_ = 0;
};

/// A derived graph plus the parent id of each of its vertices.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& s, std::size_t parent_universe) const;
};

/// G<Y>: Y contracted into `contracted`, plus the degree-1 vertex `leaf`
/// attached to it. Surviving vertices keep their relative order and come
/// first; `to_parent` has -1 for the two new vertices.
struct Contraction {
  Graph graph;
  std::vector<Vertex> to_parent;
  Vertex contracted = -1;
  Vertex leaf = -1;

  /// Maps a vertex set of the contracted graph back: `contracted` expands to
  /// Y, `leaf` is dropped.
  VertexSet lift(const VertexSet& s, const VertexSet& y) const;
};

struct Degeneracy {
  std::vector<Vertex> removal_order;
  int value = 0;
};

Graph complement(const Graph& g);
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
Subgraph delete_vertices(const Graph& g, const VertexSet& s);
Contraction contract_with_pendant(const Graph& g, const VertexSet& y);

/// Repeatedly removes a minimum-degree vertex (lowest id on ties).
Degeneracy degeneracy_order(const Graph& g);

/// Parts ordered by their lowest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);
bool induces_connected(const Graph& g, const VertexSet& s);

/// Disjoint union; the second graph's ids are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union plus every edge between the two sides.
Graph full_join(const Graph& a, const Graph& b);
/// Same graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace epa
