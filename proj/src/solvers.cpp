#include "epa/solvers.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "epa/check.hpp"
#include "epa/error.hpp"
#include "epa/recognizers.hpp"

namespace epa {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Dinic's max flow with exact rational capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(idx(nodes), -1), level_(idx(nodes)), it_(idx(nodes)) {}

  void add_arc(int u, int v, const Rational& cap) {
    arcs_.push_back({v, head_[idx(u)], cap});
    head_[idx(u)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[idx(v)], Rational(0)});
    head_[idx(v)] = static_cast<int>(arcs_.size()) - 1;
  }

  Rational max_flow(int s, int t) {
    Rational total = 0;
    while (bfs(s, t)) {
      std::copy(head_.begin(), head_.end(), it_.begin());
      for (;;) {
        Rational pushed = push(s, t, Rational(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from s in the residual network (valid after max_flow).
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::deque<int> queue{s};
    seen[idx(s)] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a = head_[idx(u)]; a >= 0; a = arcs_[idx(a)].next)
        if (arcs_[idx(a)].cap > 0 && !seen[idx(arcs_[idx(a)].to)]) {
          seen[idx(arcs_[idx(a)].to)] = true;
          queue.push_back(arcs_[idx(a)].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    Rational cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[idx(s)] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a = head_[idx(u)]; a >= 0; a = arcs_[idx(a)].next)
        if (arcs_[idx(a)].cap > 0 && level_[idx(arcs_[idx(a)].to)] < 0) {
          level_[idx(arcs_[idx(a)].to)] = level_[idx(u)] + 1;
          queue.push_back(arcs_[idx(a)].to);
        }
    }
    return level_[idx(t)] >= 0;
  }

  // limit < 0 means unbounded.
  Rational push(int u, int t, const Rational& limit) {
    if (u == t) return limit;
    for (int& a = it_[idx(u)]; a >= 0; a = arcs_[idx(a)].next) {
      Arc& arc = arcs_[idx(a)];
      if (arc.cap <= 0 || level_[idx(arc.to)] != level_[idx(u)] + 1) continue;
      Rational want = (limit < 0 || arc.cap < limit) ? arc.cap : limit;
      Rational got = push(arc.to, t, want);
      if (got > 0) {
        arc.cap -= got;
        arcs_[idx(a ^ 1)].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

// Edmonds' blossom algorithm, one augmenting path search per root.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(idx(g.order())), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  Matching run() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (match_[idx(v)] >= 0) continue;
      // Cheap greedy start.
      for (Vertex w : g_.neighbors(v))
        if (match_[idx(w)] < 0) {
          match_[idx(w)] = v;
          match_[idx(v)] = w;
          break;
        }
    }
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (match_[idx(root)] >= 0) continue;
      Vertex v = find_path(root);
      while (v >= 0) {
        Vertex pv = parent_[idx(v)];
        Vertex ppv = match_[idx(pv)];
        match_[idx(v)] = pv;
        match_[idx(pv)] = v;
        v = ppv;
      }
    }
    Matching out;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (match_[idx(v)] > v) out.emplace_back(v, match_[idx(v)]);
    return out;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (match_[idx(a)] < 0) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = true;
      blossom_[idx(base_[idx(match_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
    used_[idx(root)] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] >= 0 && parent_[idx(match_[idx(to)])] >= 0)) {
          Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i)
            if (blossom_[idx(base_[i])]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(static_cast<Vertex>(i));
              }
            }
        } else if (parent_[idx(to)] < 0) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] < 0) return to;
          Vertex next = match_[idx(to)];
          used_[idx(next)] = true;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

struct CotreeCover {
  Rational weight;
  VertexSet cover;
};

}  // namespace

VertexSet wvc_forest(const Graph& g, const WeightFn& w) {
  const auto n = idx(g.order());
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (Vertex r = 0; r < g.order(); ++r) {
    if (seen[idx(r)]) continue;
    seen[idx(r)] = true;
    std::vector<Vertex> stack{r};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (u == parent[idx(v)]) continue;
        if (seen[idx(u)]) throw PreconditionError("wvc_forest: input has a cycle");
        seen[idx(u)] = true;
        parent[idx(u)] = v;
        stack.push_back(u);
      }
    }
  }
  // in[v]: best cover of v's subtree containing v; out[v]: avoiding v.
  std::vector<Rational> in(n), out(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    in[idx(v)] += w[v];
    Vertex p = parent[idx(v)];
    if (p >= 0) {
      in[idx(p)] += std::min(in[idx(v)], out[idx(v)]);
      out[idx(p)] += in[idx(v)];
    }
  }
  VertexSet cover(n);
  for (Vertex v : order) {
    Vertex p = parent[idx(v)];
    bool take = p >= 0 && !cover.contains(p) ? true : in[idx(v)] < out[idx(v)];
    if (take) cover.insert(v);
  }
  return cover;
}

VertexSet wvc_cograph(const Graph& g, const WeightFn& w) {
  auto built = build_cotree(g);
  if (auto* bad = std::get_if<ForbiddenWitness>(&built)) {
    std::string msg = "wvc_cograph: induced P4 on";
    for (Vertex v : bad->vertices) msg += " " + std::to_string(v);
    throw PreconditionError(msg);
  }
  const auto& tree = std::get<Cotree>(built);
  const auto n = idx(g.order());
  if (n == 0) return VertexSet(0);
  std::vector<CotreeCover> memo(tree.nodes.size());
  std::vector<VertexSet> leaves(tree.nodes.size());
  // Children are created before their parents, so index order is a post-order.
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    if (node.kind == Cotree::Kind::Leaf) {
      leaves[i] = VertexSet(n, {node.vertex});
      memo[i] = {Rational(0), VertexSet(n)};
      continue;
    }
    leaves[i] = VertexSet(n);
    for (int c : node.children) leaves[i] |= leaves[idx(c)];
    if (node.kind == Cotree::Kind::Union) {
      CotreeCover acc{Rational(0), VertexSet(n)};
      for (int c : node.children) {
        acc.weight += memo[idx(c)].weight;
        acc.cover |= memo[idx(c)].cover;
      }
      memo[i] = std::move(acc);
    } else {
      // All but one child must be taken whole.
      bool have = false;
      for (int c : node.children) {
        VertexSet rest = leaves[i] - leaves[idx(c)];
        Rational cost = w.total(rest) + memo[idx(c)].weight;
        if (!have || cost < memo[i].weight) {
          memo[i] = {cost, rest | memo[idx(c)].cover};
          have = true;
        }
      }
    }
  }
  return memo[idx(tree.root)].cover;
}

VertexSet wvc_cluster(const Graph& g, const WeightFn& w) {
  if (auto p = find_pattern(g, Pattern::P3)) throw PreconditionError("wvc_cluster: input has an induced P3");
  VertexSet cover = g.vertices();
  for (const auto& clique : connected_components(g)) {
    Vertex keep = clique.first();
    clique.for_each([&](Vertex v) {
      if (w[v] > w[keep]) keep = v;
    });
    cover.erase(keep);
  }
  return cover;
}

HalfIntegralLP lp_half_integral_vc(const Graph& g, const WeightFn& w) {
  const int n = g.order();
  const int s = 2 * n;
  const int t = 2 * n + 1;
  const Rational unbounded = w.total() + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(s, v, w[v]);
    net.add_arc(n + v, t, w[v]);
  }
  for (auto [u, v] : g.edges()) {
    net.add_arc(u, n + v, unbounded);
    net.add_arc(v, n + u, unbounded);
  }
  net.max_flow(s, t);
  auto side = net.source_side(s);
  HalfIntegralLP lp{std::vector<int>(idx(n), 0), Rational(0), VertexSet(idx(n)), VertexSet(idx(n)), VertexSet(idx(n))};
  for (Vertex v = 0; v < n; ++v) {
    int h = (side[idx(v)] ? 0 : 1) + (side[idx(n + v)] ? 1 : 0);
    lp.halves[idx(v)] = h;
    lp.objective += w[v] * h;
    (h == 0 ? lp.v0 : h == 1 ? lp.vhalf : lp.v1).insert(v);
  }
  lp.objective /= 2;
  lp.objective.canonicalize();
  return lp;
}

Matching max_matching(const Graph& g) { return Blossom(g).run(); }

VertexSet fvs_2approx(const Graph& g, const WeightFn& w) {
  const auto n = idx(g.order());
  std::vector<Rational> r = w.values();
  VertexSet alive = g.vertices();
  std::vector<Vertex> added;
  for (;;) {
    // Strip vertices of degree <= 1; they lie on no cycle.
    for (bool changed = true; changed;) {
      changed = false;
      alive.for_each([&](Vertex v) {
        if ((g.neighborhood(v) & alive).size() <= 1) {
          alive.erase(v);
          changed = true;
        }
      });
    }
    if (alive.empty()) break;
    Rational gamma = -1;
    alive.for_each([&](Vertex v) {
      Rational ratio = r[idx(v)] / static_cast<long>((g.neighborhood(v) & alive).size());
      if (gamma < 0 || ratio < gamma) gamma = ratio;
    });
    std::vector<Vertex> zero;
    alive.for_each([&](Vertex v) {
      r[idx(v)] -= gamma * static_cast<long>((g.neighborhood(v) & alive).size());
      if (r[idx(v)] == 0) zero.push_back(v);
    });
    for (Vertex v : zero) {
      alive.erase(v);
      added.push_back(v);
    }
  }
  VertexSet fvs = VertexSet::from(n, added);
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    fvs.erase(*it);
    if (!check::is_feedback_vertex_set(g, fvs)) fvs.insert(*it);
  }
  return fvs;
}

VertexSet cvc_savage(const Graph& g) {
  const auto n = idx(g.order());
  if (n == 0 || !is_connected(g)) throw PreconditionError("cvc_savage: input must be connected and nonempty");
  Vertex root = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 2) {
      root = v;
      break;
    }
  VertexSet internal(n);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[idx(root)] = true;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    auto nbrs = g.neighbors(v);
    while (i < nbrs.size() && seen[idx(nbrs[i])]) ++i;
    if (i == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    Vertex u = nbrs[i];
    internal.insert(v);
    seen[idx(u)] = true;
    stack.emplace_back(u, 0);
  }
  return internal;
}

VertexSet vc_2approx(const Graph& g, const WeightFn& w) {
  std::vector<Rational> r = w.values();
  for (auto [u, v] : g.edges()) {
    if (r[idx(u)] == 0 || r[idx(v)] == 0) continue;
    Rational delta = std::min(r[idx(u)], r[idx(v)]);
    r[idx(u)] -= delta;
    r[idx(v)] -= delta;
  }
  VertexSet cover(idx(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    if (r[idx(v)] == 0 && g.degree(v) > 0) cover.insert(v);
  return cover;
}

}  // namespace epa
