#include "epa/recognizers.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "epa/check.hpp"
#include "epa/error.hpp"

namespace epa {

namespace {

constexpr std::array kClassNames{
    std::pair{GraphClass::Edgeless, std::string_view{"edgeless"}},
    std::pair{GraphClass::Forest, std::string_view{"forest"}},
    std::pair{GraphClass::Bipartite, std::string_view{"bipartite"}},
    std::pair{GraphClass::Cluster, std::string_view{"cluster"}},
    std::pair{GraphClass::Cocluster, std::string_view{"cocluster"}},
    std::pair{GraphClass::Cograph, std::string_view{"cograph"}},
    std::pair{GraphClass::Split, std::string_view{"split"}},
    std::pair{GraphClass::Chordal, std::string_view{"chordal"}},
    std::pair{GraphClass::Cochordal, std::string_view{"cochordal"}},
    std::pair{GraphClass::TriangleFree, std::string_view{"triangle-free"}},
    std::pair{GraphClass::CoTriangleFree, std::string_view{"co-triangle-free"}},
    std::pair{GraphClass::P3K1Free, std::string_view{"p3k1-free"}},
};

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Shortest path from s to t inside `allowed` (both endpoints included in it).
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex s, Vertex t, const VertexSet& allowed) {
  std::vector<Vertex> parent(idx(g.order()), -1);
  VertexSet seen(idx(g.order()));
  std::deque<Vertex> queue{s};
  seen.insert(s);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (Vertex w : g.neighbors(v))
      if (allowed.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        parent[idx(w)] = v;
        queue.push_back(w);
      }
  }
  if (!seen.contains(t)) return std::nullopt;
  std::vector<Vertex> path{t};
  while (path.back() != s) path.push_back(parent[idx(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<Vertex>> find_p3(const Graph& g, const VertexSet& within) {
  for (Vertex v = within.first(); v >= 0; v = within.next(v + 1)) {
    VertexSet nbrs = g.neighborhood(v) & within;
    for (Vertex a = nbrs.first(); a >= 0; a = nbrs.next(a + 1)) {
      VertexSet rest = nbrs - g.closed_neighborhood(a);
      Vertex b = rest.next(a + 1);
      if (b >= 0) return std::vector<Vertex>{a, v, b};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      VertexSet common = g.neighborhood(u) & g.neighborhood(v);
      Vertex w = common.next(v + 1);
      if (w >= 0) return std::vector<Vertex>{u, v, w};
    }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_p4(const Graph& g) {
  for (Vertex b = 0; b < g.order(); ++b)
    for (Vertex c : g.neighbors(b)) {
      VertexSet ends_a = g.neighborhood(b) - g.closed_neighborhood(c);
      VertexSet ends_d = g.neighborhood(c) - g.closed_neighborhood(b);
      for (Vertex a = ends_a.first(); a >= 0; a = ends_a.next(a + 1)) {
        Vertex d = (ends_d - g.neighborhood(a)).first();
        if (d >= 0) return std::vector<Vertex>{a, b, c, d};
      }
    }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_p3k1(const Graph& g) {
  for (Vertex d = 0; d < g.order(); ++d) {
    VertexSet far = g.closed_neighborhood(d).complement();
    if (auto p = find_p3(g, far)) {
      p->push_back(d);
      return p;
    }
  }
  return std::nullopt;
}

// Odd cycle through a same-side edge (u, v) of a BFS layering.
std::vector<Vertex> odd_cycle_from(const std::vector<Vertex>& parent, const std::vector<int>& depth, Vertex u,
                                   Vertex v) {
  std::vector<Vertex> left{u};
  std::vector<Vertex> right{v};
  while (left.back() != right.back()) {
    if (depth[idx(left.back())] >= depth[idx(right.back())])
      left.push_back(parent[idx(left.back())]);
    else
      right.push_back(parent[idx(right.back())]);
  }
  right.pop_back();
  std::reverse(right.begin(), right.end());
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

Recognition recognize_forest(const Graph& g) {
  Recognition r{GraphClass::Forest};
  const auto n = idx(g.order());
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (depth[idx(s)] >= 0) continue;
    depth[idx(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (depth[idx(w)] < 0) {
          depth[idx(w)] = depth[idx(v)] + 1;
          parent[idx(w)] = v;
          queue.push_back(w);
        } else if (w != parent[idx(v)] && v != parent[idx(w)]) {
          // Non-tree edge: tree paths to the common ancestor close a cycle.
          std::vector<Vertex> left{v};
          std::vector<Vertex> right{w};
          while (left.back() != right.back()) {
            if (depth[idx(left.back())] >= depth[idx(right.back())])
              left.push_back(parent[idx(left.back())]);
            else
              right.push_back(parent[idx(right.back())]);
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          r.witness = ForbiddenWitness{Pattern::Cycle, std::move(left)};
          return r;
        }
      }
    }
  }
  r.member = true;
  return r;
}

Recognition recognize_bipartite(const Graph& g) {
  Recognition r{GraphClass::Bipartite};
  const auto n = idx(g.order());
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, -1);
  Bipartition bp{std::vector<int>(n, 0)};
  for (Vertex s = 0; s < g.order(); ++s) {
    if (depth[idx(s)] >= 0) continue;
    depth[idx(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (depth[idx(w)] < 0) {
          depth[idx(w)] = depth[idx(v)] + 1;
          parent[idx(w)] = v;
          bp.side[idx(w)] = 1 - bp.side[idx(v)];
          queue.push_back(w);
        } else if (bp.side[idx(w)] == bp.side[idx(v)]) {
          r.witness = ForbiddenWitness{Pattern::OddCycle, odd_cycle_from(parent, depth, v, w)};
          return r;
        }
      }
    }
  }
  r.member = true;
  r.structure = std::move(bp);
  return r;
}

Recognition recognize_chordal(const Graph& g, GraphClass tag, Pattern hole_pattern) {
  Recognition r{tag};
  auto order = mcs_elimination_order(g);
  if (is_perfect_elimination_order(g, order)) {
    r.member = true;
    r.structure = EliminationOrdering{std::move(order)};
    return r;
  }
  auto hole = find_hole(g);
  if (!hole) throw std::logic_error("non-chordal graph without a hole");
  r.witness = ForbiddenWitness{hole_pattern, std::move(*hole)};
  return r;
}

Recognition recognize_split(const Graph& g) {
  Recognition r{GraphClass::Split};
  if (auto h = find_hole(g)) {
    const auto& c = *h;
    if (c.size() == 4)
      r.witness = ForbiddenWitness{Pattern::C4, c};
    else if (c.size() == 5)
      r.witness = ForbiddenWitness{Pattern::C5, c};
    else
      r.witness = ForbiddenWitness{Pattern::TwoK2, {c[0], c[1], c[3], c[4]}};
    return r;
  }
  const Graph co = complement(g);
  if (auto h = find_hole(co)) {
    const auto& c = *h;
    if (c.size() == 4)
      r.witness = ForbiddenWitness{Pattern::TwoK2, {c[0], c[2], c[1], c[3]}};
    else if (c.size() == 5)
      r.witness = ForbiddenWitness{Pattern::C5, {c[0], c[2], c[4], c[1], c[3]}};
    else
      r.witness = ForbiddenWitness{Pattern::C4, {c[0], c[3], c[1], c[4]}};
    return r;
  }
  // Chordal with chordal complement. Degree-sequence split: the m highest
  // degree vertices form the clique for m = max{i : d_i >= i - 1}.
  std::vector<Vertex> by_degree(idx(g.order()));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t m = 0;
  for (std::size_t i = 0; i < by_degree.size(); ++i)
    if (g.degree(by_degree[i]) >= static_cast<int>(i)) m = i + 1;
  SplitPartition sp{g.empty_set(), g.empty_set()};
  for (std::size_t i = 0; i < by_degree.size(); ++i) (i < m ? sp.clique : sp.independent).insert(by_degree[i]);
  r.member = true;
  r.structure = std::move(sp);
  return r;
}

std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> parts;
  VertexSet unseen = within;
  for (Vertex s = unseen.first(); s >= 0; s = unseen.first()) {
    VertexSet part(idx(g.order()));
    std::deque<Vertex> queue{s};
    unseen.erase(s);
    part.insert(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      VertexSet fresh = unseen - g.neighborhood(v);
      fresh.for_each([&](Vertex w) {
        unseen.erase(w);
        part.insert(w);
        queue.push_back(w);
      });
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

bool pattern_fixed_edges(Pattern p, std::size_t& size, std::vector<Edge>& edges) {
  switch (p) {
    case Pattern::Edge: size = 2; edges = {{0, 1}}; return true;
    case Pattern::P3: size = 3; edges = {{0, 1}, {1, 2}}; return true;
    case Pattern::CoP3: size = 3; edges = {{0, 1}}; return true;
    case Pattern::P4: size = 4; edges = {{0, 1}, {1, 2}, {2, 3}}; return true;
    case Pattern::Triangle: size = 3; edges = {{0, 1}, {1, 2}, {0, 2}}; return true;
    case Pattern::CoTriangle: size = 3; edges = {}; return true;
    case Pattern::P3K1: size = 4; edges = {{0, 1}, {1, 2}}; return true;
    case Pattern::TwoK2: size = 4; edges = {{0, 1}, {2, 3}}; return true;
    case Pattern::C4: size = 4; edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}}; return true;
    case Pattern::C5: size = 5; edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}; return true;
    default: return false;
  }
}

}  // namespace

std::string_view name(GraphClass c) {
  for (auto [k, s] : kClassNames)
    if (k == c) return s;
  return "unknown";
}

std::string_view name(Pattern p) {
  switch (p) {
    case Pattern::Edge: return "edge";
    case Pattern::P3: return "P3";
    case Pattern::CoP3: return "co-P3";
    case Pattern::P4: return "P4";
    case Pattern::Triangle: return "triangle";
    case Pattern::CoTriangle: return "co-triangle";
    case Pattern::P3K1: return "P3+K1";
    case Pattern::TwoK2: return "2K2";
    case Pattern::C4: return "C4";
    case Pattern::C5: return "C5";
    case Pattern::Cycle: return "cycle";
    case Pattern::OddCycle: return "odd-cycle";
    case Pattern::Hole: return "hole";
    case Pattern::AntiHole: return "anti-hole";
  }
  return "unknown";
}

std::optional<GraphClass> parse_graph_class(std::string_view s) {
  for (auto [k, v] : kClassNames)
    if (v == s) return k;
  return std::nullopt;
}

const std::vector<GraphClass>& all_graph_classes() {
  static const std::vector<GraphClass> all = [] {
    std::vector<GraphClass> v;
    for (auto [k, s] : kClassNames) v.push_back(k);
    return v;
  }();
  return all;
}

Graph Cotree::evaluate() const {
  std::vector<Edge> edges;
  for (const auto& node : nodes) {
    if (node.kind != Kind::Join) continue;
    std::vector<std::vector<Vertex>> sides;
    for (int c : node.children) sides.push_back(leaves(c).members());
    for (std::size_t i = 0; i < sides.size(); ++i)
      for (std::size_t j = i + 1; j < sides.size(); ++j)
        for (Vertex a : sides[i])
          for (Vertex b : sides[j]) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(vertex_count, edges);
}

VertexSet Cotree::leaves(int node) const {
  VertexSet out(idx(vertex_count));
  std::vector<int> stack{node};
  while (!stack.empty()) {
    const Node& cur = nodes[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    if (cur.kind == Kind::Leaf)
      out.insert(cur.vertex);
    else
      stack.insert(stack.end(), cur.children.begin(), cur.children.end());
  }
  return out;
}

std::variant<Cotree, ForbiddenWitness> build_cotree(const Graph& g) {
  Cotree tree;
  tree.vertex_count = g.order();
  if (g.order() == 0) return tree;

  std::function<int(const VertexSet&)> build = [&](const VertexSet& s) -> int {
    if (s.size() == 1) {
      tree.nodes.push_back({Cotree::Kind::Leaf, s.first(), {}});
      return static_cast<int>(tree.nodes.size()) - 1;
    }
    auto parts = connected_components(g, s);
    Cotree::Kind kind = Cotree::Kind::Union;
    if (parts.size() == 1) {
      parts = co_components(g, s);
      kind = Cotree::Kind::Join;
      if (parts.size() == 1) return -1;
    }
    std::vector<int> children;
    for (const auto& p : parts) {
      int c = build(p);
      if (c < 0) return -1;
      children.push_back(c);
    }
    tree.nodes.push_back({kind, -1, std::move(children)});
    return static_cast<int>(tree.nodes.size()) - 1;
  };

  // Locate a level where G[S] and its complement are both connected and
  // extract a P4 there; such a level exists iff g is not a cograph.
  std::function<std::optional<VertexSet>(const VertexSet&)> stuck = [&](const VertexSet& s) -> std::optional<VertexSet> {
    if (s.size() <= 1) return std::nullopt;
    auto parts = connected_components(g, s);
    if (parts.size() == 1) parts = co_components(g, s);
    if (parts.size() == 1) return s;
    for (const auto& p : parts)
      if (auto r = stuck(p)) return r;
    return std::nullopt;
  };

  tree.root = build(g.vertices());
  if (tree.root >= 0) return tree;

  auto level = stuck(g.vertices());
  if (!level) throw std::logic_error("cotree construction failed without a prime level");
  auto sub = induced_subgraph(g, *level);
  auto p4 = find_p4(sub.graph);
  if (!p4) throw std::logic_error("prime level without an induced P4");
  for (auto& v : *p4) v = sub.to_parent[idx(v)];
  return ForbiddenWitness{Pattern::P4, std::move(*p4)};
}

std::optional<std::vector<Vertex>> find_pattern(const Graph& g, Pattern p) {
  switch (p) {
    case Pattern::P3: return find_p3(g, g.vertices());
    case Pattern::CoP3: {
      // P3 a-b-c of the complement: a,c adjacent here, b isolated from both.
      auto q = find_p3(complement(g), g.vertices());
      if (!q) return std::nullopt;
      return std::vector<Vertex>{(*q)[0], (*q)[2], (*q)[1]};
    }
    case Pattern::P4: return find_p4(g);
    case Pattern::Triangle: return find_triangle(g);
    case Pattern::CoTriangle: return find_triangle(complement(g));
    case Pattern::P3K1: return find_p3k1(g);
    default: throw UnsupportedError("find_induced does not support pattern " + std::string(name(p)));
  }
}

std::optional<VertexSet> find_induced(const Graph& g, Pattern p) {
  auto found = find_pattern(g, p);
  if (!found) return std::nullopt;
  return VertexSet::from(idx(g.order()), *found);
}

std::optional<std::vector<Vertex>> find_hole(const Graph& g) {
  // A hole through v consists of two non-adjacent neighbors u, w of v joined
  // by a shortest path whose interior lies in one component of G - N[v].
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet closed = g.closed_neighborhood(v);
    for (const auto& comp : connected_components(g, closed.complement())) {
      VertexSet attach(idx(g.order()));
      comp.for_each([&](Vertex x) { attach |= g.neighborhood(x); });
      attach &= g.neighborhood(v);
      for (Vertex u = attach.first(); u >= 0; u = attach.next(u + 1)) {
        Vertex w = (attach - g.closed_neighborhood(u)).next(u + 1);
        if (w < 0) continue;
        VertexSet allowed = comp;
        allowed.insert(u);
        allowed.insert(w);
        auto path = shortest_path(g, u, w, allowed);
        if (!path) throw std::logic_error("component attachment without a path");
        std::vector<Vertex> hole{v};
        hole.insert(hole.end(), path->begin(), path->end());
        return hole;
      }
    }
  }
  return std::nullopt;
}

std::vector<Vertex> mcs_elimination_order(const Graph& g) {
  const auto n = idx(g.order());
  std::vector<int> weight(n, 0);
  std::vector<bool> done(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.order(); ++v)
      if (!done[idx(v)] && (best < 0 || weight[idx(v)] > weight[idx(best)])) best = v;
    done[idx(best)] = true;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!done[idx(w)]) ++weight[idx(w)];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  const auto n = idx(g.order());
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || idx(v) >= n || pos[idx(v)] != n) return false;
    pos[idx(v)] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet later(n);
    Vertex first_later = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[idx(w)] > i) {
        later.insert(w);
        if (first_later < 0 || pos[idx(w)] < pos[idx(first_later)]) first_later = w;
      }
    if (first_later < 0) continue;
    later.erase(first_later);
    if (!later.is_subset_of(g.neighborhood(first_later))) return false;
  }
  return true;
}

Recognition recognize(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::Edgeless: {
      Recognition r{c};
      r.member = g.edge_count() == 0;
      if (!r.member) {
        auto e = g.edges().front();
        r.witness = ForbiddenWitness{Pattern::Edge, {e.first, e.second}};
      }
      return r;
    }
    case GraphClass::Forest: return recognize_forest(g);
    case GraphClass::Bipartite: return recognize_bipartite(g);
    case GraphClass::Cluster: {
      Recognition r{c};
      if (auto p = find_pattern(g, Pattern::P3)) {
        r.witness = ForbiddenWitness{Pattern::P3, std::move(*p)};
      } else {
        r.member = true;
        r.structure = PartPartition{connected_components(g)};
      }
      return r;
    }
    case GraphClass::Cocluster: {
      Recognition r{c};
      if (auto p = find_pattern(g, Pattern::CoP3)) {
        r.witness = ForbiddenWitness{Pattern::CoP3, std::move(*p)};
      } else {
        r.member = true;
        r.structure = PartPartition{co_components(g, g.vertices())};
      }
      return r;
    }
    case GraphClass::Cograph: {
      Recognition r{c};
      auto result = build_cotree(g);
      if (auto* t = std::get_if<Cotree>(&result)) {
        r.member = true;
        r.structure = std::move(*t);
      } else {
        r.witness = std::get<ForbiddenWitness>(std::move(result));
      }
      return r;
    }
    case GraphClass::Split: return recognize_split(g);
    case GraphClass::Chordal: return recognize_chordal(g, c, Pattern::Hole);
    case GraphClass::Cochordal: return recognize_chordal(complement(g), c, Pattern::AntiHole);
    case GraphClass::TriangleFree:
    case GraphClass::CoTriangleFree:
    case GraphClass::P3K1Free: {
      const Pattern p = c == GraphClass::TriangleFree     ? Pattern::Triangle
                        : c == GraphClass::CoTriangleFree ? Pattern::CoTriangle
                                                          : Pattern::P3K1;
      Recognition r{c};
      if (auto w = find_pattern(g, p))
        r.witness = ForbiddenWitness{p, std::move(*w)};
      else
        r.member = true;
      return r;
    }
  }
  throw UnsupportedError("unknown graph class");
}

bool is_member(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::Edgeless: return g.edge_count() == 0;
    case GraphClass::Forest: return check::is_forest(g);
    case GraphClass::Cluster: return !find_p3(g, g.vertices()).has_value();
    case GraphClass::Cograph: return !find_p4(g).has_value();
    case GraphClass::Chordal: return is_perfect_elimination_order(g, mcs_elimination_order(g));
    case GraphClass::Cochordal: {
      Graph co = complement(g);
      return is_perfect_elimination_order(co, mcs_elimination_order(co));
    }
    case GraphClass::Split: {
      if (!is_perfect_elimination_order(g, mcs_elimination_order(g))) return false;
      Graph co = complement(g);
      return is_perfect_elimination_order(co, mcs_elimination_order(co));
    }
    case GraphClass::TriangleFree: return !find_triangle(g).has_value();
    default: return recognize(g, c).member;
  }
}

bool induces_pattern(const Graph& g, std::span<const Vertex> vertices, Pattern p) {
  VertexSet seen(idx(g.order()));
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  switch (p) {
    case Pattern::Cycle: return check::is_cycle(g, vertices);
    case Pattern::OddCycle: return vertices.size() % 2 == 1 && check::is_cycle(g, vertices);
    case Pattern::Hole: return check::is_hole(g, vertices);
    case Pattern::AntiHole: return check::is_hole(complement(g), vertices);
    default: break;
  }
  std::size_t size = 0;
  std::vector<Edge> edges;
  pattern_fixed_edges(p, size, edges);
  if (vertices.size() != size) return false;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      bool want = std::any_of(edges.begin(), edges.end(), [&](Edge e) {
        return (idx(e.first) == i && idx(e.second) == j) || (idx(e.first) == j && idx(e.second) == i);
      });
      if (want != g.adjacent(vertices[i], vertices[j])) return false;
    }
  return true;
}

bool induces_pattern(const Graph& g, const VertexSet& s, Pattern p) {
  std::size_t size = 0;
  std::vector<Edge> edges;
  if (!pattern_fixed_edges(p, size, edges)) throw UnsupportedError("set-level check needs a fixed-size pattern");
  auto perm = s.members();
  if (perm.size() != size) return false;
  do {
    if (induces_pattern(g, std::span<const Vertex>(perm), p)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool witness_valid(const Graph& g, const Recognition& r) {
  if (!r.member) {
    if (!r.witness) return false;
    const auto& w = *r.witness;
    return induces_pattern(g, std::span<const Vertex>(w.vertices), w.pattern);
  }
  const auto n = idx(g.order());
  switch (r.graph_class) {
    case GraphClass::Edgeless: return g.edge_count() == 0;
    case GraphClass::Forest: return check::is_forest(g);
    case GraphClass::Bipartite: {
      const auto* bp = std::get_if<Bipartition>(&r.structure);
      if (!bp || bp->side.size() != n) return false;
      for (auto [u, v] : g.edges())
        if (bp->side[idx(u)] == bp->side[idx(v)]) return false;
      return true;
    }
    case GraphClass::Cluster:
    case GraphClass::Cocluster: {
      const auto* pp = std::get_if<PartPartition>(&r.structure);
      if (!pp) return false;
      std::vector<int> part(n, -1);
      for (std::size_t i = 0; i < pp->parts.size(); ++i)
        for (Vertex v : pp->parts[i].members()) {
          if (part[idx(v)] >= 0) return false;
          part[idx(v)] = static_cast<int>(i);
        }
      const bool within_adjacent = r.graph_class == GraphClass::Cluster;
      for (Vertex u = 0; u < g.order(); ++u) {
        if (part[idx(u)] < 0) return false;
        for (Vertex v = u + 1; v < g.order(); ++v) {
          const bool same = part[idx(u)] == part[idx(v)];
          if (g.adjacent(u, v) != (same == within_adjacent)) return false;
        }
      }
      return true;
    }
    case GraphClass::Cograph: {
      const auto* t = std::get_if<Cotree>(&r.structure);
      if (!t || t->vertex_count != g.order()) return false;
      if (g.order() > 0) {
        if (t->root < 0) return false;
        if (t->leaves(t->root) != g.vertices()) return false;
        // Union and join labels alternate along root-to-leaf paths.
        for (const auto& node : t->nodes)
          for (int c : node.children) {
            const auto& child = t->nodes[static_cast<std::size_t>(c)];
            if (child.kind != Cotree::Kind::Leaf && child.kind == node.kind) return false;
          }
      }
      return t->evaluate() == g;
    }
    case GraphClass::Split: {
      const auto* sp = std::get_if<SplitPartition>(&r.structure);
      if (!sp || sp->clique.universe() != n || sp->independent.universe() != n) return false;
      if (sp->clique.intersects(sp->independent) || (sp->clique | sp->independent) != g.vertices()) return false;
      return check::is_clique(g, sp->clique) && check::is_independent_set(g, sp->independent);
    }
    case GraphClass::Chordal:
    case GraphClass::Cochordal: {
      const auto* eo = std::get_if<EliminationOrdering>(&r.structure);
      if (!eo) return false;
      return r.graph_class == GraphClass::Chordal ? is_perfect_elimination_order(g, eo->order)
                                                  : is_perfect_elimination_order(complement(g), eo->order);
    }
    case GraphClass::TriangleFree:
    case GraphClass::CoTriangleFree: {
      const bool co = r.graph_class == GraphClass::CoTriangleFree;
      for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
          for (Vertex c = b + 1; c < g.order(); ++c) {
            const int e = g.adjacent(a, b) + g.adjacent(b, c) + g.adjacent(a, c);
            if (e == (co ? 0 : 3)) return false;
          }
      return true;
    }
    case GraphClass::P3K1Free: {
      std::vector<Vertex> quad(4);
      for (quad[0] = 0; quad[0] < g.order(); ++quad[0])
        for (quad[1] = quad[0] + 1; quad[1] < g.order(); ++quad[1])
          for (quad[2] = quad[1] + 1; quad[2] < g.order(); ++quad[2])
            for (quad[3] = quad[2] + 1; quad[3] < g.order(); ++quad[3])
              if (induces_pattern(g, VertexSet::from(n, quad), Pattern::P3K1)) return false;
      return true;
    }
  }
  return false;
}

}  // namespace epa
