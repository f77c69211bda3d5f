// Connected vertex cover bound with a split modulator.
#include "acceptance/report.hpp"
#include "epa/check.hpp"
#include "epa/cvc_epa.hpp"
#include "epa/oracle.hpp"
#include "support.hpp"

using namespace epa;

int main() {
  testing::Criterion crit(3, "connected vertex cover bound, 3000 connected graphs 5 <= n <= 10");
  SplitMix64 rng(4242);
  const int instances = 3000;
  for (int i = 0; i < instances; ++i) {
    const Graph g = testing::random_connected(rng, 10, 5);
    const ConnectedVCSol s = cvc_split(g);
    const int opt = oracle::exact_min_cvc(g).size;
    const Rational k = oracle::exact_min_modulator(g, GraphClass::Split).value;
    crit.check(check::is_connected_vertex_cover(g, s.cover) && static_cast<int>(s.cover.size()) == s.size && s.size <= opt + k,
               "instance " + std::to_string(i) + ": " + std::to_string(s.size) + " > " + std::to_string(opt) + " + " +
                   to_string(k));
  }
  return crit.finish();
}
