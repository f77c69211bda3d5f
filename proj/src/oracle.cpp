#include "epa/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "epa/error.hpp"

namespace epa::oracle {

namespace {

using Mask = std::uint32_t;

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;
};

MaskGraph to_masks(const Graph& g, bool complemented = false) {
  MaskGraph mg{g.order(), std::vector<Mask>(idx(g.order()), 0)};
  const Mask all = g.order() == 32 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbors(v)) mg.adj[idx(v)] |= Mask{1} << u;
    if (complemented) mg.adj[idx(v)] = all & ~mg.adj[idx(v)] & ~(Mask{1} << v);
  }
  return mg;
}

void require(const Graph& g, int limit, const char* what) {
  const int cap = std::min(limit, kMaxOracleVertices);
  if (g.order() > cap)
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(g.order()) + " exceeds oracle budget " +
                         std::to_string(cap));
}

class Steps {
 public:
  explicit Steps(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++count_ > limit_) throw BudgetExceeded("oracle step limit exceeded");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

VertexSet to_set(Mask m, int n) {
  VertexSet s(idx(n));
  for (; m != 0; m &= m - 1) s.insert(std::countr_zero(m));
  return s;
}

Mask full_mask(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Next mask with the same popcount (Gosper's hack); 0 when exhausted.
Mask next_same_size(Mask x, int n) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  const Mask next = (((r ^ x) >> 2) / c) | r;
  if (r == 0 || next > full_mask(n)) return 0;
  return next;
}

// Visits the size-k subsets of n vertices in increasing mask order until f returns true.
template <class F>
bool first_of_size(int n, int k, F&& f) {
  if (k > n) return false;
  for (Mask m = full_mask(k);;) {
    if (f(m)) return true;
    if (k == 0) return false;
    m = next_same_size(m, n);
    if (m == 0) return false;
  }
}

bool induced_connected(const MaskGraph& g, Mask m) {
  if (m == 0) return true;
  Mask seen = m & (~m + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask grow = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) grow |= g.adj[idx(std::countr_zero(f))];
    grow &= m & ~seen;
    seen |= grow;
    frontier = grow;
  }
  return seen == m;
}

bool covers(const MaskGraph& g, Mask m) {
  for (int v = 0; v < g.n; ++v)
    if (!(m >> v & 1) && (g.adj[idx(v)] & ~m) != 0) return false;
  return true;
}

std::vector<int> degree_profile(const MaskGraph& g, Mask m) {
  std::vector<int> d;
  for (Mask f = m; f != 0; f &= f - 1) d.push_back(std::popcount(g.adj[idx(std::countr_zero(f))] & m));
  std::sort(d.begin(), d.end());
  return d;
}

bool chordless_cycle(const MaskGraph& g, Mask m) {
  if (std::popcount(m) < 3) return false;
  for (Mask f = m; f != 0; f &= f - 1)
    if (std::popcount(g.adj[idx(std::countr_zero(f))] & m) != 2) return false;
  return induced_connected(g, m);
}

// Minimal forbidden induced subgraphs of the class, as vertex masks. Deleting
// X lands in the class iff X meets every one of them.
std::vector<Mask> obstructions(const Graph& graph, GraphClass c, Steps& steps) {
  const bool co = c == GraphClass::Cochordal;
  const MaskGraph g = to_masks(graph, co);
  const int n = g.n;
  std::vector<std::vector<int>> profiles;
  switch (c) {
    case GraphClass::Edgeless: profiles = {{1, 1}}; break;
    case GraphClass::Cluster: profiles = {{1, 1, 2}}; break;
    case GraphClass::Cocluster: profiles = {{0, 1, 1}}; break;
    case GraphClass::Cograph: profiles = {{1, 1, 2, 2}}; break;
    case GraphClass::Split: profiles = {{1, 1, 1, 1}, {2, 2, 2, 2}, {2, 2, 2, 2, 2}}; break;
    case GraphClass::TriangleFree: profiles = {{2, 2, 2}}; break;
    case GraphClass::CoTriangleFree: profiles = {{0, 0, 0}}; break;
    case GraphClass::P3K1Free: profiles = {{0, 1, 1, 2}}; break;
    default: break;
  }
  std::vector<Mask> out;
  const Mask top = full_mask(n);
  for (Mask m = 1; m != 0 && m <= top; ++m) {
    steps.tick();
    const int k = std::popcount(m);
    switch (c) {
      case GraphClass::Forest:
        if (chordless_cycle(g, m)) out.push_back(m);
        break;
      case GraphClass::Bipartite:
        if (k % 2 == 1 && chordless_cycle(g, m)) out.push_back(m);
        break;
      case GraphClass::Chordal:
      case GraphClass::Cochordal:
        if (k >= 4 && chordless_cycle(g, m)) out.push_back(m);
        break;
      default:
        if (k > 5) break;
        {
          auto d = degree_profile(g, m);
          if (std::find(profiles.begin(), profiles.end(), d) != profiles.end()) out.push_back(m);
        }
    }
    if (m == top) break;
  }
  return out;
}

bool hits_all(Mask x, const std::vector<Mask>& obs) {
  for (Mask o : obs)
    if ((o & x) == 0) return false;
  return true;
}

Rational mask_weight(Mask m, const WeightFn& w) {
  Rational total = 0;
  for (; m != 0; m &= m - 1) total += w[std::countr_zero(m)];
  return total;
}

// Strict order on candidate optima: value, then size, then mask.
bool better(const Rational& v, Mask m, const Rational& bv, Mask bm) {
  if (v != bv) return v < bv;
  if (std::popcount(m) != std::popcount(bm)) return std::popcount(m) < std::popcount(bm);
  return m < bm;
}

bool color_rec(const MaskGraph& g, const std::vector<int>& order, std::size_t i, int used, int k,
               std::vector<int>& col, Steps& steps) {
  if (i == order.size()) return true;
  steps.tick();
  const int v = order[i];
  Mask busy = 0;
  for (Mask f = g.adj[idx(v)]; f != 0; f &= f - 1) {
    int c = col[idx(std::countr_zero(f))];
    if (c >= 0) busy |= Mask{1} << c;
  }
  const int limit = std::min(used + 1, k);
  for (int c = 0; c < limit; ++c) {
    if (busy >> c & 1) continue;
    col[idx(v)] = c;
    if (color_rec(g, order, i + 1, std::max(used, c + 1), k, col, steps)) return true;
  }
  col[idx(v)] = -1;
  return false;
}

}  // namespace

Budget Budget::uniform(int n) {
  Budget b;
  b.vc = b.cvc = b.tp = b.coloring = b.modulator = b.lp = n;
  return b;
}

WeightedSet exact_min_wvc(const Graph& g, const WeightFn& w, const Budget& b) {
  require(g, b.vc, "exact_min_wvc");
  if (w.size() != g.order()) throw PreconditionError("weight vector length differs from vertex count");
  const MaskGraph mg = to_masks(g);
  Steps steps(b.step_limit);
  const Mask top = full_mask(mg.n);
  Rational best_value = w.total();
  Mask best = top;
  for (Mask m = 0;; ++m) {
    steps.tick();
    if (covers(mg, m)) {
      Rational v = mask_weight(m, w);
      if (better(v, m, best_value, best)) {
        best_value = v;
        best = m;
      }
    }
    if (m == top) break;
  }
  return {best_value, to_set(best, mg.n)};
}

SizedSet exact_min_cvc(const Graph& g, const Budget& b) {
  require(g, b.cvc, "exact_min_cvc");
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("exact_min_cvc: input must be connected");
  const MaskGraph mg = to_masks(g);
  Steps steps(b.step_limit);
  for (int size = 0; size <= mg.n; ++size) {
    Mask found = 0;
    bool ok = first_of_size(mg.n, size, [&](Mask m) {
      steps.tick();
      found = m;
      return covers(mg, m) && (m == 0 ? g.edge_count() == 0 : induced_connected(mg, m));
    });
    if (ok) return {size, to_set(found, mg.n)};
  }
  throw std::logic_error("no connected vertex cover found");
}

Coloring exact_chromatic(const Graph& g, const Budget& b) {
  require(g, b.coloring, "exact_chromatic");
  const MaskGraph mg = to_masks(g);
  Steps steps(b.step_limit);
  Coloring out{0, {}};
  if (mg.n == 0) return out;
  std::vector<int> order(idx(mg.n));
  for (int v = 0; v < mg.n; ++v) order[idx(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return g.degree(a) > g.degree(c); });
  for (int k = 1; k <= mg.n; ++k) {
    std::vector<int> col(idx(mg.n), -1);
    if (color_rec(mg, order, 0, 0, k, col, steps)) {
      out.chi = k;
      for (int& c : col) ++c;
      out.color = std::move(col);
      return out;
    }
  }
  throw std::logic_error("coloring search failed");
}

Packing exact_max_tp(const Graph& g, const Budget& b) {
  require(g, b.tp, "exact_max_tp");
  const MaskGraph mg = to_masks(g);
  Steps steps(b.step_limit);
  std::vector<std::vector<Mask>> through(idx(mg.n));
  for (int u = 0; u < mg.n; ++u)
    for (int v = u + 1; v < mg.n; ++v) {
      if (!(mg.adj[idx(u)] >> v & 1)) continue;
      for (Mask common = mg.adj[idx(u)] & mg.adj[idx(v)] & ~full_mask(v + 1); common != 0; common &= common - 1) {
        Mask t = (Mask{1} << u) | (Mask{1} << v) | (Mask{1} << std::countr_zero(common));
        through[idx(u)].push_back(t);
      }
    }
  // best(m): maximum packing inside m; branch on the lowest vertex of m.
  std::unordered_map<Mask, int> memo;
  auto best = [&](auto&& self, Mask m) -> int {
    if (m == 0) return 0;
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    steps.tick();
    const int v = std::countr_zero(m);
    int value = self(self, m & (m - 1));
    for (Mask t : through[idx(v)])
      if ((t & m) == t) value = std::max(value, 1 + self(self, m & ~t));
    memo.emplace(m, value);
    return value;
  };
  Packing out;
  Mask m = full_mask(mg.n);
  out.size = best(best, m);
  int left = out.size;
  while (left > 0) {
    const int v = std::countr_zero(m);
    bool taken = false;
    for (Mask t : through[idx(v)])
      if ((t & m) == t && 1 + best(best, m & ~t) == left) {
        out.triangles.push_back(to_set(t, mg.n));
        m &= ~t;
        --left;
        taken = true;
        break;
      }
    if (!taken) m &= m - 1;
  }
  return out;
}

WeightedSet exact_min_modulator(const Graph& g, GraphClass c, const WeightFn* w, const Budget& b) {
  require(g, b.modulator, "exact_min_modulator");
  if (w != nullptr && w->size() != g.order()) throw PreconditionError("weight vector length differs from vertex count");
  Steps steps(b.step_limit);
  const auto obs = obstructions(g, c, steps);
  const int n = g.order();
  if (w == nullptr || w->is_unit()) {
    for (int size = 0; size <= n; ++size) {
      Mask found = 0;
      bool ok = first_of_size(n, size, [&](Mask m) {
        steps.tick();
        found = m;
        return hits_all(m, obs);
      });
      if (ok) return {Rational(size), to_set(found, n)};
    }
    throw std::logic_error("no modulator found");
  }
  const Mask top = full_mask(n);
  Rational best_value = w->total();
  Mask best = top;
  for (Mask m = 0;; ++m) {
    steps.tick();
    if (hits_all(m, obs)) {
      Rational v = mask_weight(m, *w);
      if (better(v, m, best_value, best)) {
        best_value = v;
        best = m;
      }
    }
    if (m == top) break;
  }
  return {best_value, to_set(best, n)};
}

Rational exact_lp_vc(const Graph& g, const WeightFn& w, const Budget& b) {
  require(g, b.lp, "exact_lp_vc");
  if (w.size() != g.order()) throw PreconditionError("weight vector length differs from vertex count");
  const int n = g.order();
  Steps steps(b.step_limit);
  // Scale to integers so the search adds mpz values only.
  mpz_class scale = 1;
  for (const auto& q : w.values()) scale = lcm(scale, mpz_class(q.get_den()));
  std::vector<mpz_class> iw;
  for (const auto& q : w.values()) iw.push_back(mpz_class(q.get_num() * (scale / q.get_den())));
  std::vector<int> h(idx(n), 0);
  mpz_class best = 0;
  for (const auto& x : iw) best += 2 * x;
  auto dfs = [&](auto&& self, int v, const mpz_class& partial) -> void {
    if (partial >= best) return;
    if (v == n) {
      best = partial;
      return;
    }
    steps.tick();
    int need = 0;
    for (Vertex u : g.neighbors(v))
      if (u < v) need = std::max(need, 2 - h[idx(u)]);
    for (int x = need; x <= 2; ++x) {
      h[idx(v)] = x;
      self(self, v + 1, partial + x * iw[idx(v)]);
    }
    h[idx(v)] = 0;
  };
  dfs(dfs, 0, mpz_class(0));
  Rational out(best, 2 * scale);
  out.canonicalize();
  return out;
}

int exact_max_matching(const Graph& g, const Budget& b) {
  require(g, b.vc, "exact_max_matching");
  const MaskGraph mg = to_masks(g);
  Steps steps(b.step_limit);
  std::unordered_map<Mask, int> memo;
  auto best = [&](auto&& self, Mask m) -> int {
    if (m == 0) return 0;
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    steps.tick();
    const int v = std::countr_zero(m);
    const Mask rest = m & (m - 1);
    int value = self(self, rest);
    for (Mask f = mg.adj[idx(v)] & rest; f != 0; f &= f - 1)
      value = std::max(value, 1 + self(self, rest & ~(Mask{1} << std::countr_zero(f))));
    memo.emplace(m, value);
    return value;
  };
  return best(best, full_mask(mg.n));
}

}  // namespace epa::oracle
