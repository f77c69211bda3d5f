// The cochordal family on which greedy maximal independent sets use 2n - 1 colors.
#include "acceptance/report.hpp"
#include "epa/check.hpp"
#include "epa/color_epa.hpp"
#include "epa/oracle.hpp"

using namespace epa;

int main() {
  testing::Criterion crit(5, "tight cochordal family, n = 3 and n = 4");
  std::string counts;
  for (int n : {3, 4}) {
    const Graph g = fig6_instance(n);
    const oracle::Budget budget = oracle::Budget::uniform(3 * n);
    const std::string tag = "n = " + std::to_string(n);
    crit.check(is_member(g, GraphClass::Cochordal), tag + " not cochordal");
    const int chi = oracle::exact_chromatic(g, budget).chi;
    crit.check(chi == n, tag + " chi = " + std::to_string(chi));
    const ColoringSol s = color_greedy_mis(g);
    crit.check(check::is_proper_coloring(g, s.color), tag + " improper");
    crit.check(s.colors_used == 2 * n - 1, tag + " greedy used " + std::to_string(s.colors_used));
    const int k = static_cast<int>(oracle::exact_min_modulator(g, GraphClass::Cochordal, nullptr, budget).value.get_num().get_si());
    crit.check(s.colors_used <= 2 * chi + k - 1, tag + " bound");
    counts += (counts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": chi " + std::to_string(chi) +
              ", greedy " + std::to_string(s.colors_used);
  }
  crit.note(counts);
  return crit.finish();
}
