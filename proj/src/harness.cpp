#include "epa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>
#include <tuple>

#include "epa/check.hpp"
#include "epa/color_epa.hpp"
#include "epa/cvc_epa.hpp"
#include "epa/error.hpp"
#include "epa/generator.hpp"
#include "epa/pack_epa.hpp"
#include "epa/solvers.hpp"
#include "epa/vc_epa.hpp"

namespace epa {

namespace {

std::vector<int> one_based(const VertexSet& s) {
  std::vector<int> out;
  s.for_each([&](Vertex v) { out.push_back(v + 1); });
  return out;
}

SolveOutput from_cover(std::string alg, std::string trace, const Instance& inst, VertexSet cover, bool connected) {
  SolveOutput out;
  out.problem = connected ? Problem::CVC : Problem::VC;
  out.alg = std::move(alg);
  out.trace = std::move(trace);
  out.value = connected ? Rational(static_cast<long>(cover.size())) : inst.weights.total(cover);
  out.feasible = connected ? check::is_connected_vertex_cover(inst.graph, cover) : check::is_vertex_cover(inst.graph, cover);
  out.set = std::move(cover);
  return out;
}

SolveOutput from_coloring(std::string alg, const Instance& inst, const ColoringSol& c) {
  SolveOutput out;
  out.problem = Problem::COL;
  out.alg = std::move(alg);
  out.trace = c.trace;
  out.value = c.colors_used;
  out.coloring = c.color;
  out.feasible = check::is_proper_coloring(inst.graph, c.color);
  return out;
}

SolveOutput from_packing(std::string alg, const Instance& inst, const TrianglePackingSol& p) {
  SolveOutput out;
  out.problem = Problem::TP;
  out.trace = alg;
  out.alg = std::move(alg);
  out.value = p.size;
  out.triangles = p.triangles;
  out.feasible = check::is_triangle_packing(inst.graph, p.triangles);
  return out;
}

void require_unit(const Instance& inst, const char* what) {
  if (!inst.weights.is_unit()) throw UnsupportedError(std::string(what) + " is defined for unit weights only");
}

void require_connected(const Instance& inst) {
  if (inst.graph.order() == 0 || !is_connected(inst.graph))
    throw UnsupportedError("connected vertex cover needs a connected graph");
}

std::string rat(const Rational& q) { return to_string(q); }

}  // namespace

std::optional<Problem> parse_problem(std::string_view s) {
  if (s == "vc") return Problem::VC;
  if (s == "cvc") return Problem::CVC;
  if (s == "col") return Problem::COL;
  if (s == "tp") return Problem::TP;
  return std::nullopt;
}

std::string_view name(Problem p) {
  switch (p) {
    case Problem::VC: return "vc";
    case Problem::CVC: return "cvc";
    case Problem::COL: return "col";
    case Problem::TP: return "tp";
  }
  return "?";
}

const std::vector<Row>& implemented_rows() {
  static const std::vector<Row> rows{
      {Problem::VC, "cograph", "vc_local_ratio_p4", GraphClass::Cograph, "OPT + 2k"},
      {Problem::VC, "cluster", "vc_local_ratio_p3", GraphClass::Cluster, "OPT + 2k"},
      {Problem::VC, "ccluster", "vc_local_ratio_cop3", GraphClass::Cocluster, "OPT + 2k"},
      {Problem::VC, "fvs", "vc_fvs", GraphClass::Forest, "OPT + k"},
      {Problem::VC, "chordal", "vc_chordal", GraphClass::Chordal, "3/2 OPT + k"},
      {Problem::VC, "split", "vc_split", GraphClass::Split, "OPT + k"},
      {Problem::CVC, "split", "cvc_split", GraphClass::Split, "OPT + k"},
      {Problem::COL, "oct", "color_bipartite_oracle", GraphClass::Bipartite, "2 + k"},
      {Problem::COL, "chordal", "color_degeneracy", GraphClass::Chordal, "chi(G-M) + k"},
      {Problem::COL, "cograph", "color_greedy_mis", GraphClass::Cograph, "chi(G-M) + k"},
      {Problem::COL, "cchordal", "color_greedy_mis", GraphClass::Cochordal, "2 chi(G-M) + k - 1"},
      {Problem::COL, "p3k1", "color_p3k1free", GraphClass::P3K1Free, "chi(G-M) + k"},
      {Problem::TP, "cluster", "tp_maximal", GraphClass::Cluster, "OPT - k"},
      {Problem::TP, "ccluster", "tp_3maximal", GraphClass::Cocluster, "OPT - k"},
  };
  return rows;
}

const Row& lookup_row(Problem p, std::string_view param) {
  if (param == "cvd") param = "cluster";
  if (param == "ccvd") param = "ccluster";
  if (param == "cgvd") param = "cograph";
  for (const Row& r : implemented_rows())
    if (r.problem == p && r.param == param) return r;
  throw UnsupportedError("no algorithm for " + std::string(name(p)) + " with parameter '" + std::string(param) + "'");
}

SolveOutput solve(const Row& row, const Instance& inst) {
  const Graph& g = inst.graph;
  const WeightFn& w = inst.weights;
  switch (row.problem) {
    case Problem::VC: {
      VertexCoverSol s;
      if (row.param == "cograph") s = vc_local_ratio_ffree(g, w, FFreeConfig::cograph());
      else if (row.param == "cluster") s = vc_local_ratio_ffree(g, w, FFreeConfig::cluster());
      else if (row.param == "ccluster") s = vc_local_ratio_ffree(g, w, FFreeConfig::cocluster());
      else if (row.param == "fvs") s = vc_fvs(g, w);
      else if (row.param == "chordal") s = vc_chordal(g, w);
      else {
        require_unit(inst, "vc_split");
        s = vc_split(g);
      }
      return from_cover(row.alg, s.trace + "@" + std::to_string(s.depth), inst, std::move(s.cover), false);
    }
    case Problem::CVC: {
      require_unit(inst, "cvc_split");
      require_connected(inst);
      ConnectedVCSol s = cvc_split(g);
      return from_cover(row.alg, s.trace, inst, std::move(s.cover), true);
    }
    case Problem::COL: {
      if (row.param == "oct") return from_coloring(row.alg, inst, color_with_class_oracle(g, ClassColoringOracle::bipartite()));
      if (row.param == "chordal") return from_coloring(row.alg, inst, color_degeneracy(g));
      if (row.param == "p3k1") return from_coloring(row.alg, inst, color_p3k1free(g));
      return from_coloring(row.alg, inst, color_greedy_mis(g));
    }
    case Problem::TP:
      if (row.param == "cluster") return from_packing(row.alg, inst, tp_maximal(g));
      return from_packing(row.alg, inst, tp_3maximal(g));
  }
  throw UnsupportedError("unknown problem");
}

std::optional<SolveOutput> solve_baseline(Problem p, const Instance& inst) {
  if (p == Problem::VC) return from_cover("vc_2approx", "local-ratio:edge", inst, vc_2approx(inst.graph, inst.weights), false);
  if (p == Problem::CVC) {
    require_connected(inst);
    return from_cover("cvc_savage", "dfs-tree", inst, cvc_savage(inst.graph), true);
  }
  return std::nullopt;
}

bool within_bound(const Rational& value, const Rational& bound, bool minimize) {
  return minimize ? value <= bound : value >= bound;
}

namespace {

Rational optimum(Problem p, const Instance& inst, const oracle::Budget& b) {
  switch (p) {
    case Problem::VC: return oracle::exact_min_wvc(inst.graph, inst.weights, b).value;
    case Problem::CVC: return oracle::exact_min_cvc(inst.graph, b).size;
    case Problem::COL: return oracle::exact_chromatic(inst.graph, b).chi;
    case Problem::TP: return oracle::exact_max_tp(inst.graph, b).size;
  }
  return 0;
}

template <class F>
SolveOutput timed(F&& f, std::optional<long long>& micros) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveOutput s = f();
  micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

}  // namespace

GuaranteeReport verify(const Row& row, const Instance& inst, const oracle::Budget& budget) {
  GuaranteeReport r;
  SolveOutput s = timed([&] { return solve(row, inst); }, r.micros);
  r.alg = s.alg;
  r.formula = row.formula;
  r.value = s.value;
  r.feasible = s.feasible;
  r.minimize = row.problem != Problem::TP;
  r.opt = optimum(row.problem, inst, budget);
  const bool weighted = row.problem == Problem::VC;
  const oracle::WeightedSet m =
      oracle::exact_min_modulator(inst.graph, row.modulator_class, weighted ? &inst.weights : nullptr, budget);
  r.k = m.value;
  switch (row.problem) {
    case Problem::VC:
      if (row.param == "cograph" || row.param == "cluster" || row.param == "ccluster") r.bound = r.opt + 2 * r.k;
      else if (row.param == "chordal") r.bound = Rational(3, 2) * r.opt + r.k;
      else r.bound = r.opt + r.k;
      break;
    case Problem::CVC: r.bound = r.opt + r.k; break;
    case Problem::COL: {
      if (row.param == "oct") {
        r.bound = 2 + r.k;
        break;
      }
      const Subgraph rest = delete_vertices(inst.graph, m.set);
      const Rational chi = oracle::exact_chromatic(rest.graph, budget).chi;
      if (row.param == "cchordal") r.bound = rest.graph.order() == 0 ? r.k : 2 * chi + r.k - 1;
      else r.bound = chi + r.k;
      break;
    }
    case Problem::TP: r.bound = r.opt - r.k; break;
  }
  r.bound.canonicalize();
  r.pass = r.feasible && within_bound(r.value, r.bound, r.minimize);
  return r;
}

std::optional<GuaranteeReport> verify_baseline(Problem p, const Instance& inst, const oracle::Budget& budget) {
  GuaranteeReport r;
  std::optional<SolveOutput> s;
  {
    const auto t0 = std::chrono::steady_clock::now();
    s = solve_baseline(p, inst);
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
  }
  if (!s) return std::nullopt;
  r.alg = s->alg;
  r.formula = "2 OPT";
  r.value = s->value;
  r.feasible = s->feasible;
  r.opt = optimum(p, inst, budget);
  r.k = 0;
  r.bound = 2 * r.opt;
  r.pass = r.feasible && within_bound(r.value, r.bound, true);
  return r;
}

nlohmann::json to_json(const SolveOutput& s) {
  nlohmann::json j{{"alg", s.alg}, {"trace", s.trace}, {"value", rat(s.value)}, {"feasible", s.feasible}};
  if (s.set) j["set"] = one_based(*s.set);
  if (s.problem == Problem::COL) j["coloring"] = s.coloring;
  if (s.problem == Problem::TP) {
    j["triangles"] = nlohmann::json::array();
    for (const auto& t : s.triangles) j["triangles"].push_back(one_based(t));
  }
  return j;
}

nlohmann::json to_json(const GuaranteeReport& r) {
  nlohmann::json j{{"alg", r.alg},         {"value", rat(r.value)}, {"opt", rat(r.opt)},
                   {"k", rat(r.k)},         {"formula", r.formula},  {"bound", rat(r.bound)},
                   {"minimize", r.minimize}, {"feasible", r.feasible}, {"pass", r.pass}};
  if (r.micros) j["micros"] = *r.micros;
  return j;
}

std::string format_solution(const SolveOutput& s) {
  std::ostringstream out;
  out << "alg " << s.alg << "\ntrace " << s.trace << "\nvalue " << rat(s.value) << "\nfeasible "
      << (s.feasible ? "yes" : "no") << '\n';
  if (s.set) {
    out << "set";
    for (int v : one_based(*s.set)) out << ' ' << v;
    out << '\n';
  }
  if (!s.coloring.empty()) {
    out << "color";
    for (int c : s.coloring) out << ' ' << c;
    out << '\n';
  }
  for (const auto& t : s.triangles) {
    out << "triangle";
    for (int v : one_based(t)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string format_report(const GuaranteeReport& r) {
  std::ostringstream out;
  out << "alg " << r.alg << "\nvalue " << rat(r.value) << "\nopt " << rat(r.opt) << "\nk " << rat(r.k) << "\nbound "
      << r.formula << " = " << rat(r.bound) << "\nfeasible " << (r.feasible ? "yes" : "no") << "\nresult "
      << (r.pass ? "pass" : "FAIL") << '\n';
  return out.str();
}

namespace {

struct BenchRow {
  std::uint64_t seed;
  int k;
  int order;
  std::string line;
};

std::string csv_line(std::uint64_t seed, std::string_view cls, int n, int k, const std::optional<GuaranteeReport>& r,
                     const std::string& alg, const std::string& value, bool timing) {
  std::ostringstream out;
  out << seed << ',' << cls << ',' << n << ',' << k << ',';
  if (r) {
    out << rat(r->k) << ',' << alg << ',' << value << ',' << rat(r->opt) << ',' << rat(r->bound) << ','
        << (r->pass ? "true" : "false");
  } else {
    out << ',' << alg << ',' << value << ",,,";
  }
  out << ',';
  if (timing && r && r->micros) out << *r->micros;
  return out.str();
}

std::vector<BenchRow> bench_instance(const BenchSpec& spec, const Row& row, std::uint64_t seed, int k) {
  const int base_n = spec.n - k;
  std::vector<BenchRow> out;
  if (base_n < 0) return out;
  GeneratorSpec gs{row.modulator_class, base_n, k, 500, seed};
  Generated gen = generate(gs);
  if (row.problem == Problem::CVC) {
    // Redraw with a derived seed until connected.
    for (std::uint64_t a = 1; (gen.graph.order() == 0 || !is_connected(gen.graph)) && a < 256; ++a) {
      gs.seed = seed + a * 0x9E3779B97F4A7C15ULL;
      gen = generate(gs);
    }
  }
  const Instance inst{gen.graph, WeightFn::unit(gen.graph.order())};
  const std::string cls(name(row.modulator_class));
  std::optional<Rational> k_oracle;
  auto emit = [&](const std::string& alg, auto&& run_verify, auto&& run_plain) {
    std::optional<GuaranteeReport> r;
    std::string value;
    try {
      r = run_verify();
      if (r && k_oracle) r->k = *k_oracle;
      if (r) k_oracle = r->k;
      if (r) value = rat(r->value);
    } catch (const BudgetExceeded&) {
      r.reset();
      value = run_plain();
    } catch (const UnsupportedError&) {
      r.reset();
      value = "";
    }
    out.push_back({seed, k, static_cast<int>(out.size()), csv_line(seed, cls, spec.n, k, r, alg, value, spec.timing)});
  };
  emit(row.alg, [&] { return std::optional<GuaranteeReport>(verify(row, inst, spec.budget)); },
       [&] { return rat(solve(row, inst).value); });
  if (row.problem == Problem::VC || row.problem == Problem::CVC) {
    const std::string alg = row.problem == Problem::VC ? "vc_2approx" : "cvc_savage";
    emit(alg, [&] { return verify_baseline(row.problem, inst, spec.budget); },
         [&] { return rat(solve_baseline(row.problem, inst)->value); });
  }
  return out;
}

}  // namespace

std::string bench_csv(const BenchSpec& spec) {
  const Row& row = lookup_row(spec.problem, spec.param);
  struct Job {
    std::uint64_t seed;
    int k;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < spec.count; ++i)
    for (int k = 0; k <= spec.k_max; ++k) jobs.push_back({spec.seed + static_cast<std::uint64_t>(i), k});
  std::vector<std::vector<BenchRow>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) try {
        results[j] = bench_instance(spec, row, jobs[j].seed, jobs[j].k);
      } catch (...) {
        errors[j] = std::current_exception();
      }
  };
  const int workers = std::max(1, spec.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<BenchRow> rows;
  for (auto& r : results) rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.seed, a.k, a.order) < std::tie(b.seed, b.k, b.order);
  });
  std::string out(kBenchHeader);
  out += '\n';
  for (const auto& r : rows) out += r.line + '\n';
  return out;
}

}  // namespace epa
