#include "epa/graph_builders.hpp"

namespace epa::named {

Graph edgeless(int n) { return Graph(n); }

Graph path(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  std::vector<int> part;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) part.insert(part.end(), static_cast<std::size_t>(part_sizes[i]), static_cast<int>(i));
  const auto n = static_cast<Vertex>(part.size());
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

}  // namespace epa::named
