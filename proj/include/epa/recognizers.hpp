#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epa/graph.hpp"

namespace epa {

enum class GraphClass {
  Edgeless,
  Forest,
  Bipartite,
  Cluster,
  Cocluster,
  Cograph,
  Split,
  Chordal,
  Cochordal,
  TriangleFree,
  CoTriangleFree,
  P3K1Free,
};

/// Induced patterns that can serve as negative witnesses. The vertex order of
/// a witness matters: paths are listed end to end, cycles cyclically,
/// P3+K1 as the path followed by the isolated vertex, co-P3 as the edge
/// followed by the isolated vertex, 2K2 as the two edges.
enum class Pattern {
  Edge,
  P3,
  CoP3,
  P4,
  Triangle,
  CoTriangle,
  P3K1,
  TwoK2,
  C4,
  C5,
  Cycle,     // any cycle, chords allowed
  OddCycle,  // odd cycle, chords allowed
  Hole,      // chordless cycle of length >= 4
  AntiHole,  // complement of a hole, listed in the hole's cyclic order
};

std::string_view name(GraphClass c);
std::string_view name(Pattern p);
std::optional<GraphClass> parse_graph_class(std::string_view s);
const std::vector<GraphClass>& all_graph_classes();

struct ForbiddenWitness {
  Pattern pattern;
  std::vector<Vertex> vertices;
};

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
};

/// Vertex order in which each vertex's later neighbors form a clique (in the
/// complement for cochordal graphs).
struct EliminationOrdering {
  std::vector<Vertex> order;
};

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

/// Cluster: the cliques. Cocluster: the independent parts of the complete
/// multipartite graph.
struct PartPartition {
  std::vector<VertexSet> parts;
};

struct Cotree {
  enum class Kind { Leaf, Union, Join };
  struct Node {
    Kind kind = Kind::Leaf;
    Vertex vertex = -1;  // leaves only
    std::vector<int> children;
  };

  std::vector<Node> nodes;
  int root = -1;
  int vertex_count = 0;

  /// The graph the cotree describes.
  Graph evaluate() const;
  /// Leaves below `node`.
  VertexSet leaves(int node) const;
};

using ClassStructure = std::variant<std::monostate, Bipartition, EliminationOrdering, SplitPartition, PartPartition, Cotree>;

struct Recognition {
  GraphClass graph_class;
  bool member = false;
  ClassStructure structure{};
  std::optional<ForbiddenWitness> witness{};
};

Recognition recognize(const Graph& g, GraphClass c);
bool is_member(const Graph& g, GraphClass c);

/// Cotree of a cograph, or an induced P4 when g is not a cograph.
std::variant<Cotree, ForbiddenWitness> build_cotree(const Graph& g);

/// Ordered occurrence of one of P3, co-P3, P4, triangle, co-triangle, P3+K1;
/// nullopt iff g is free of it. Other patterns throw UnsupportedError.
std::optional<std::vector<Vertex>> find_pattern(const Graph& g, Pattern p);
std::optional<VertexSet> find_induced(const Graph& g, Pattern p);

/// Chordless cycle of length >= 4 in cyclic order, if any.
std::optional<std::vector<Vertex>> find_hole(const Graph& g);

/// Maximum cardinality search; the reverse visit order, which is a perfect
/// elimination ordering exactly when g is chordal.
std::vector<Vertex> mcs_elimination_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

/// Independent witness checks.
bool induces_pattern(const Graph& g, std::span<const Vertex> vertices, Pattern p);
/// Set-level variant for fixed-size patterns: some ordering of `s` matches.
bool induces_pattern(const Graph& g, const VertexSet& s, Pattern p);
bool witness_valid(const Graph& g, const Recognition& r);

}  // namespace epa
