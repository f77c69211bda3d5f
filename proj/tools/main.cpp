// epa: solve, verify, bench, gen and oracle entry points.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "epa/error.hpp"
#include "epa/generator.hpp"
#include "epa/harness.hpp"
#include "epa/io.hpp"
#include "epa/oracle.hpp"

namespace {

enum Exit { kOk = 0, kParse = 1, kUnsupported = 2, kBudget = 3 };

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw epa::ParseError(0, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

epa::Problem problem_of(const std::string& s) {
  auto p = epa::parse_problem(s);
  if (!p) throw epa::UnsupportedError("unknown problem '" + s + "'");
  return *p;
}

epa::oracle::Budget budget_of(int n) { return n > 0 ? epa::oracle::Budget::uniform(n) : epa::oracle::Budget{}; }

std::vector<int> one_based(const epa::VertexSet& s) {
  std::vector<int> out;
  s.for_each([&](epa::Vertex v) { out.push_back(v + 1); });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Efficient parameterized approximation toolkit"};
  app.require_subcommand(1);

  std::string problem = "vc", param, input, csv_path, output, cls = "cluster";
  std::uint64_t seed = 1;
  bool json = false, timing = false;
  int budget = 0, n = 9, k = 0, k_max = 3, count = 10, workers = 1;
  std::uint64_t density = 500;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--problem", problem, "vc, cvc, col or tp");
    sub->add_option("--param", param, "parameter: cograph, cluster, ccluster, fvs, chordal, split, oct, p3k1, cchordal");
  };

  auto* solve = app.add_subcommand("solve", "run the algorithm for a (problem, parameter) pair");
  add_common(solve);
  solve->add_option("--input", input, "instance file (default stdin)");
  solve->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "run the algorithm and the oracles, check the guarantee");
  add_common(verify);
  verify->add_option("--input", input, "instance file (default stdin)");
  verify->add_option("--oracle-budget", budget, "oracle vertex limit");
  verify->add_flag("--json", json);

  auto* bench = app.add_subcommand("bench", "seeded sweep over generated instances");
  add_common(bench);
  bench->add_option("--seed", seed, "first seed");
  bench->add_option("--count", count, "number of seeds");
  bench->add_option("--n", n, "total vertex count");
  bench->add_option("--k-max", k_max, "largest planted modulator");
  bench->add_option("--workers", workers, "worker threads");
  bench->add_option("--oracle-budget", budget, "oracle vertex limit");
  bench->add_option("--csv", csv_path, "output file (default stdout)");
  bench->add_flag("--timing", timing, "fill the micros column");

  auto* gen = app.add_subcommand("gen", "generate an instance with a planted modulator");
  gen->add_option("--class", cls, "base graph class");
  gen->add_option("--n", n, "base order");
  gen->add_option("--k", k, "planted modulator size");
  gen->add_option("--seed", seed);
  gen->add_option("--density", density, "modulator attachment, per mille");
  gen->add_option("--output", output, "instance file; the planted set goes to <output>.planted");

  auto* orc = app.add_subcommand("oracle", "exact optimum (and modulator with --param)");
  add_common(orc);
  orc->add_option("--input", input, "instance file (default stdin)");
  orc->add_option("--oracle-budget", budget, "oracle vertex limit");
  orc->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*solve) {
      const epa::Instance inst = epa::parse_instance(read_input(input));
      const auto out = epa::solve(epa::lookup_row(problem_of(problem), param), inst);
      std::cout << (json ? epa::to_json(out).dump(2) + "\n" : epa::format_solution(out));
    } else if (*verify) {
      const epa::Instance inst = epa::parse_instance(read_input(input));
      const auto r = epa::verify(epa::lookup_row(problem_of(problem), param), inst, budget_of(budget));
      std::cout << (json ? epa::to_json(r).dump(2) + "\n" : epa::format_report(r));
    } else if (*bench) {
      epa::BenchSpec spec;
      spec.problem = problem_of(problem);
      spec.param = param;
      spec.n = n;
      spec.k_max = k_max;
      spec.seed = seed;
      spec.count = count;
      spec.workers = workers;
      spec.timing = timing;
      spec.budget = budget_of(budget);
      const std::string csv = epa::bench_csv(spec);
      if (csv_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream f(csv_path);
        if (!(f << csv)) {
          std::cerr << "epa: cannot write " << csv_path << '\n';
          return kParse;
        }
      }
    } else if (*gen) {
      auto c = epa::parse_graph_class(cls);
      if (!c) throw epa::UnsupportedError("unknown class '" + cls + "'");
      const epa::Generated g = epa::generate({*c, n, k, density, seed});
      const epa::Instance inst{g.graph, epa::WeightFn::unit(g.graph.order())};
      std::ostringstream planted;
      for (int v : one_based(g.planted)) planted << (planted.tellp() > 0 ? " " : "") << v;
      const std::vector<std::string> header{"class " + cls + " n " + std::to_string(n) + " k " + std::to_string(k) +
                                            " seed " + std::to_string(seed)};
      if (output.empty()) {
        auto comments = header;
        comments.push_back("planted " + planted.str());
        std::cout << epa::serialize_instance(inst, comments);
      } else {
        std::ofstream f(output), side(output + ".planted");
        f << epa::serialize_instance(inst, header);
        side << planted.str() << '\n';
        if (!f || !side) {
          std::cerr << "epa: cannot write " << output << '\n';
          return kParse;
        }
      }
    } else if (*orc) {
      const epa::Instance inst = epa::parse_instance(read_input(input));
      const auto p = problem_of(problem);
      const auto b = budget_of(budget);
      nlohmann::json j;
      switch (p) {
        case epa::Problem::VC: {
          auto r = epa::oracle::exact_min_wvc(inst.graph, inst.weights, b);
          j = {{"opt", epa::to_string(r.value)}, {"set", one_based(r.set)}};
          break;
        }
        case epa::Problem::CVC: {
          auto r = epa::oracle::exact_min_cvc(inst.graph, b);
          j = {{"opt", std::to_string(r.size)}, {"set", one_based(r.set)}};
          break;
        }
        case epa::Problem::COL: {
          auto r = epa::oracle::exact_chromatic(inst.graph, b);
          j = {{"opt", std::to_string(r.chi)}, {"coloring", r.color}};
          break;
        }
        case epa::Problem::TP: {
          auto r = epa::oracle::exact_max_tp(inst.graph, b);
          j = {{"opt", std::to_string(r.size)}, {"triangles", nlohmann::json::array()}};
          for (const auto& t : r.triangles) j["triangles"].push_back(one_based(t));
          break;
        }
      }
      if (!param.empty()) {
        const auto& row = epa::lookup_row(p, param);
        auto m = epa::oracle::exact_min_modulator(inst.graph, row.modulator_class,
                                                  p == epa::Problem::VC ? &inst.weights : nullptr, b);
        j["modulator_class"] = std::string(epa::name(row.modulator_class));
        j["k"] = epa::to_string(m.value);
        j["modulator"] = one_based(m.set);
      }
      if (json) {
        std::cout << j.dump(2) << '\n';
      } else {
        for (auto& [key, val] : j.items()) std::cout << key << ' ' << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
      }
    }
  } catch (const epa::ParseError& e) {
    std::cerr << "epa: " << e.what() << '\n';
    return kParse;
  } catch (const epa::UnsupportedError& e) {
    std::cerr << "epa: " << e.what() << '\n';
    return kUnsupported;
  } catch (const epa::PreconditionError& e) {
    std::cerr << "epa: " << e.what() << '\n';
    return kUnsupported;
  } catch (const epa::BudgetExceeded& e) {
    std::cerr << "epa: " << e.what() << '\n';
    return kBudget;
  }
  return kOk;
}
