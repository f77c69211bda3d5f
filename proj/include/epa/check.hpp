#pragma once

#include <span>
#include <vector>

#include "epa/graph.hpp"

// Certificate checkers. They only look at the graph and the certificate, so
// tests and `epa verify` never rely on a solver's own claims.

namespace epa::check {

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
/// Covers every edge and induces a connected subgraph (empty is accepted
/// only when g has no edges).
bool is_connected_vertex_cover(const Graph& g, const VertexSet& s);
/// Colors are 1..k with every value used and endpoints of every edge distinct.
bool is_proper_coloring(const Graph& g, std::span<const int> color);
/// Each triple is a triangle of g; triples are pairwise vertex-disjoint.
bool is_triangle_packing(const Graph& g, const std::vector<VertexSet>& triangles);
/// True iff g - s is a forest.
bool is_feedback_vertex_set(const Graph& g, const VertexSet& s);
/// `order` lists distinct vertices; consecutive ones (and last, first) are adjacent.
bool is_cycle(const Graph& g, std::span<const Vertex> order);
/// As is_cycle, length >= 4, and no chords.
bool is_hole(const Graph& g, std::span<const Vertex> order);
bool is_forest(const Graph& g);

}  // namespace epa::check
