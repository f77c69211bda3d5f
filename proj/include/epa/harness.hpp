#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "epa/io.hpp"
#include "epa/oracle.hpp"
#include "epa/recognizers.hpp"

namespace epa {

enum class Problem { VC, CVC, COL, TP };

std::optional<Problem> parse_problem(std::string_view s);
std::string_view name(Problem p);

/// One implemented (problem, parameter) pair.
struct Row {
  Problem problem;
  std::string param;
  std::string alg;
  GraphClass modulator_class;
  std::string formula;
};

const std::vector<Row>& implemented_rows();
/// Throws UnsupportedError for pairs outside the table. Accepts cvd / ccvd /
/// cgvd as aliases of cluster / ccluster / cograph.
const Row& lookup_row(Problem p, std::string_view param);

struct SolveOutput {
  Problem problem = Problem::VC;
  std::string alg;
  std::string trace;
  Rational value;
  std::optional<VertexSet> set;
  std::vector<int> coloring;
  std::vector<VertexSet> triangles;
  bool feasible = false;
};

SolveOutput solve(const Row& row, const Instance& inst);
/// Plain 2-approximation for vc and cvc; nullopt for the other problems.
std::optional<SolveOutput> solve_baseline(Problem p, const Instance& inst);

struct GuaranteeReport {
  std::string alg;
  std::string formula;
  Rational value;
  Rational opt;
  Rational k;
  Rational bound;
  bool minimize = true;
  bool feasible = false;
  bool pass = false;
  std::optional<long long> micros;
};

bool within_bound(const Rational& value, const Rational& bound, bool minimize);

/// Runs the algorithm and the oracles. Throws BudgetExceeded above budget.
GuaranteeReport verify(const Row& row, const Instance& inst, const oracle::Budget& budget);
/// Report for the baseline algorithm against 2 * OPT.
std::optional<GuaranteeReport> verify_baseline(Problem p, const Instance& inst, const oracle::Budget& budget);

nlohmann::json to_json(const SolveOutput& s);
nlohmann::json to_json(const GuaranteeReport& r);
std::string format_solution(const SolveOutput& s);
std::string format_report(const GuaranteeReport& r);

struct BenchSpec {
  Problem problem = Problem::VC;
  std::string param = "cluster";
  int n = 9;  // total order including the modulator
  int k_max = 3;
  std::uint64_t seed = 1;
  int count = 10;
  int workers = 1;
  bool timing = false;
  oracle::Budget budget{};
};

inline constexpr std::string_view kBenchHeader = "seed,class,n,k_planted,k_oracle,alg,value,opt,bound,pass,micros";

/// CSV text: header, then rows sorted by (seed, k_planted, algorithm).
std::string bench_csv(const BenchSpec& spec);

}  // namespace epa
