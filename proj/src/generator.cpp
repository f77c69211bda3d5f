#include "epa/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "epa/error.hpp"
#include "epa/graph_builders.hpp"
#include "epa/rng.hpp"

namespace epa {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
Vertex draw(SplitMix64& rng, int bound) { return static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(bound))); }

Graph cluster(SplitMix64& rng, int n) {
  const int parts = 1 + draw(rng, std::max(1, n / 2));
  std::vector<int> part(idx(n));
  for (auto& p : part) p = draw(rng, parts);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part[idx(u)] == part[idx(v)]) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph forest(SplitMix64& rng, int n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v)
    if (rng.chance(800)) e.emplace_back(draw(rng, v), v);
  return Graph(n, e);
}

Graph bipartite(SplitMix64& rng, int n) {
  std::vector<int> side(idx(n));
  for (auto& s : side) s = draw(rng, 2);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (side[idx(u)] != side[idx(v)] && rng.chance(500)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph split(SplitMix64& rng, int n) {
  const int c = draw(rng, n + 1);
  std::vector<Edge> e;
  for (Vertex u = 0; u < c; ++u)
    for (Vertex v = u + 1; v < c; ++v) e.emplace_back(u, v);
  for (Vertex v = c; v < n; ++v)
    for (Vertex u = 0; u < c; ++u)
      if (rng.chance(500)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph cograph(SplitMix64& rng, int n) {
  if (n == 0) return Graph(0, {});
  std::vector<Graph> pool(idx(n), named::edgeless(1));
  while (pool.size() > 1) {
    const auto i = idx(draw(rng, static_cast<int>(pool.size())));
    Graph a = std::move(pool[i]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    const auto j = idx(draw(rng, static_cast<int>(pool.size())));
    Graph b = std::move(pool[j]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    pool.push_back(rng.chance(500) ? full_join(a, b) : disjoint_union(a, b));
  }
  return pool.front();
}

// Each new vertex is simplicial: it joins a clique around a random earlier vertex.
Graph chordal(SplitMix64& rng, int n) {
  std::vector<VertexSet> adj(idx(n), VertexSet(idx(n)));
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    if (rng.chance(150)) continue;
    const Vertex u = draw(rng, v);
    VertexSet clique(idx(n), {u});
    VertexSet common = adj[idx(u)];
    for (Vertex x = common.first(); x >= 0; x = common.next(x + 1))
      if (rng.chance(500)) {
        clique.insert(x);
        common &= adj[idx(x)];
      }
    clique.for_each([&](Vertex x) {
      e.emplace_back(x, v);
      adj[idx(x)].insert(v);
      adj[idx(v)].insert(x);
    });
  }
  return Graph(n, e);
}

Graph triangle_free(SplitMix64& rng, int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
  std::vector<VertexSet> adj(idx(n), VertexSet(idx(n)));
  std::vector<Edge> e;
  for (const auto& [u, v] : pairs) {
    if (!rng.chance(500) || adj[idx(u)].intersects(adj[idx(v)])) continue;
    adj[idx(u)].insert(v);
    adj[idx(v)].insert(u);
    e.emplace_back(u, v);
  }
  return Graph(n, e);
}

Graph base_graph(GraphClass c, SplitMix64& rng, int n) {
  switch (c) {
    case GraphClass::Edgeless: return named::edgeless(n);
    case GraphClass::Forest: return forest(rng, n);
    case GraphClass::Bipartite: return bipartite(rng, n);
    case GraphClass::Cluster: return cluster(rng, n);
    case GraphClass::Cocluster: return complement(cluster(rng, n));
    case GraphClass::Cograph: return cograph(rng, n);
    case GraphClass::Split: return split(rng, n);
    case GraphClass::Chordal: return chordal(rng, n);
    case GraphClass::Cochordal: return complement(chordal(rng, n));
    case GraphClass::TriangleFree: return triangle_free(rng, n);
    case GraphClass::P3K1Free: return complement(triangle_free(rng, n));
    case GraphClass::CoTriangleFree: break;
  }
  throw UnsupportedError("generate: no generator for class " + std::string(name(c)));
}

}  // namespace

Generated generate(const GeneratorSpec& spec) {
  if (spec.n < 0 || spec.k < 0) throw PreconditionError("generate: negative size");
  SplitMix64 rng(spec.seed);
  const Graph base = base_graph(spec.base, rng, spec.n);
  const int total = spec.n + spec.k;
  std::vector<Edge> e = base.edges();
  for (Vertex m = spec.n; m < total; ++m)
    for (Vertex u = 0; u < m; ++u)
      if (rng.chance(spec.attach_permille)) e.emplace_back(u, m);
  std::vector<Vertex> perm(idx(total));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Generated out{relabel(Graph(total, e), perm), VertexSet(idx(total))};
  for (Vertex m = spec.n; m < total; ++m) out.planted.insert(perm[idx(m)]);
  if (!is_member(delete_vertices(out.graph, out.planted).graph, spec.base))
    throw std::logic_error("generate: planted set failed class verification");
  return out;
}

}  // namespace epa
