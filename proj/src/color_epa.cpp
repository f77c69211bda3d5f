#include "epa/color_epa.hpp"

#include <algorithm>
#include <deque>

#include "epa/check.hpp"
#include "epa/error.hpp"
#include "epa/recognizers.hpp"
#include "epa/solvers.hpp"

namespace epa {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Renumbers colors to 1..k by first appearance in vertex order.
ColoringSol compact(std::vector<int> color, std::string trace) {
  std::vector<int> remap;
  int k = 0;
  for (int& c : color) {
    if (idx(c) >= remap.size()) remap.resize(idx(c) + 1, 0);
    if (remap[idx(c)] == 0) remap[idx(c)] = ++k;
    c = remap[idx(c)];
  }
  return {std::move(color), k, std::move(trace)};
}

bool valid_on(const Graph& g, const std::vector<int>& col, int c) {
  if (col.size() != idx(g.order())) return false;
  for (int x : col)
    if (x < 0 || x >= c) return false;
  for (const Edge& e : g.edges())
    if (col[idx(e.first)] == col[idx(e.second)]) return false;
  return true;
}

// Greedy maximal independent set inside `pool`, seeded with `seed`, by ascending id.
VertexSet grow_independent(const Graph& g, const VertexSet& pool, VertexSet seed) {
  VertexSet blocked = seed;
  seed.for_each([&](Vertex v) { blocked |= g.neighborhood(v); });
  for (Vertex v = pool.first(); v >= 0; v = pool.next(v + 1))
    if (!blocked.contains(v)) {
      seed.insert(v);
      blocked.insert(v);
      blocked |= g.neighborhood(v);
    }
  return seed;
}

}  // namespace

ClassColoringOracle ClassColoringOracle::bipartite() {
  return {"bipartite", 2, [](const Graph& g) {
            std::vector<int> side(idx(g.order()), -1);
            for (Vertex s = 0; s < g.order(); ++s) {
              if (side[idx(s)] >= 0) continue;
              side[idx(s)] = 0;
              std::deque<Vertex> q{s};
              while (!q.empty()) {
                const Vertex v = q.front();
                q.pop_front();
                for (Vertex u : g.neighbors(v))
                  if (side[idx(u)] < 0) {
                    side[idx(u)] = 1 - side[idx(v)];
                    q.push_back(u);
                  }
              }
            }
            return side;
          }};
}

ClassColoringOracle ClassColoringOracle::degeneracy_six() {
  return {"degeneracy-6", 6, [](const Graph& g) {
            std::vector<int> col = color_degeneracy(g).color;
            for (int& c : col) --c;
            return col;
          }};
}

ColoringSol color_with_class_oracle(const Graph& g, const ClassColoringOracle& oracle) {
  const auto n = idx(g.order());
  std::vector<int> color(n, 0);
  int used = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool placed = false;
    if (oracle.c <= used) {
      std::vector<int> pick(idx(oracle.c));
      for (int i = 0; i < oracle.c; ++i) pick[idx(i)] = i + 1;
      for (;;) {
        // Vertices colored within S plus v.
        VertexSet part(n, {v});
        for (Vertex u = 0; u < v; ++u)
          if (std::find(pick.begin(), pick.end(), color[idx(u)]) != pick.end()) part.insert(u);
        const Subgraph sub = induced_subgraph(g, part);
        const std::vector<int> attempt = oracle.attempt(sub.graph);
        if (valid_on(sub.graph, attempt, oracle.c)) {
          for (std::size_t i = 0; i < sub.to_parent.size(); ++i) color[idx(sub.to_parent[i])] = pick[idx(attempt[i])];
          placed = true;
          break;
        }
        int i = oracle.c;
        while (i > 0 && pick[idx(i - 1)] == used - oracle.c + i) --i;
        if (i == 0) break;
        ++pick[idx(i - 1)];
        for (int j = i; j < oracle.c; ++j) pick[idx(j)] = pick[idx(j - 1)] + 1;
      }
    }
    if (!placed) color[idx(v)] = ++used;
  }
  return compact(std::move(color), "class-oracle:" + oracle.name);
}

ColoringSol color_degeneracy(const Graph& g) {
  const Degeneracy d = degeneracy_order(g);
  std::vector<int> color(idx(g.order()), 0);
  for (auto it = d.removal_order.rbegin(); it != d.removal_order.rend(); ++it) {
    std::vector<bool> taken(g.neighbors(*it).size() + 2, false);
    for (Vertex u : g.neighbors(*it))
      if (idx(color[idx(u)]) < taken.size()) taken[idx(color[idx(u)])] = true;
    int c = 1;
    while (taken[idx(c)]) ++c;
    color[idx(*it)] = c;
  }
  return compact(std::move(color), "degeneracy");
}

ColoringSol color_greedy_mis(const Graph& g) {
  const auto n = idx(g.order());
  std::vector<int> color(n, 0);
  VertexSet left = g.vertices();
  int k = 0;
  while (!left.empty()) {
    const VertexSet s = grow_independent(g, left, VertexSet(n));
    ++k;
    s.for_each([&](Vertex v) { color[idx(v)] = k; });
    left -= s;
  }
  return {std::move(color), k, "greedy-mis"};
}

ColoringSol color_p3k1free(const Graph& g) {
  const auto n = idx(g.order());
  std::vector<int> color(n, 0);
  VertexSet left = g.vertices();
  int k = 0;
  for (;;) {
    const Subgraph cur = induced_subgraph(g, left);
    auto t = find_pattern(cur.graph, Pattern::CoTriangle);
    if (!t) break;
    VertexSet seed(n);
    for (Vertex v : *t) seed.insert(cur.to_parent[idx(v)]);
    const VertexSet s = grow_independent(g, left, std::move(seed));
    ++k;
    s.for_each([&](Vertex v) { color[idx(v)] = k; });
    left -= s;
  }
  const Subgraph rest = induced_subgraph(g, left);
  VertexSet paired(n);
  for (const Edge& e : max_matching(complement(rest.graph))) {
    ++k;
    color[idx(rest.to_parent[idx(e.first)])] = k;
    color[idx(rest.to_parent[idx(e.second)])] = k;
  }
  for (Vertex v : rest.to_parent)
    if (color[idx(v)] == 0) color[idx(v)] = ++k;
  return compact(std::move(color), "p3k1-free");
}

Graph fig6_instance(int n) {
  if (n < 2) throw PreconditionError("fig6_instance: n >= 2");
  // Labels: y1, then x_i y_i for i = 2..n-1, then x_n, x_1, z_1, y_n, z_n, z_2..z_{n-1}.
  std::vector<Vertex> x(idx(n)), y(idx(n)), z(idx(n));
  Vertex next = 0;
  y[0] = next++;
  for (int i = 1; i + 1 < n; ++i) {
    x[idx(i)] = next++;
    y[idx(i)] = next++;
  }
  x[idx(n - 1)] = next++;
  x[0] = next++;
  z[0] = next++;
  y[idx(n - 1)] = next++;
  z[idx(n - 1)] = next++;
  for (int i = 1; i + 1 < n; ++i) z[idx(i)] = next++;
  std::vector<Edge> h;
  auto add = [&](Vertex a, Vertex b) { h.emplace_back(std::min(a, b), std::max(a, b)); };
  for (int i = 0; i < n; ++i) {
    add(x[idx(i)], y[idx(i)]);
    add(y[idx(i)], z[idx(i)]);
    add(x[idx(i)], z[idx(i)]);
    if (i + 1 < n) add(y[idx(i)], x[idx(i + 1)]);
  }
  return complement(Graph(3 * n, h));
}

}  // namespace epa
