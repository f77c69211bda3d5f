// `epa bench` output is byte-identical across runs and worker counts.
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "acceptance/report.hpp"

namespace {

std::string bench(const std::string& args, const std::string& out) {
  const std::string cmd = std::string(EPA_CLI) + " bench " + args + " --csv " + out;
  if (std::system(cmd.c_str()) != 0) return "<failed: " + cmd + ">";
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  epa::testing::Criterion crit(9, "bench determinism across runs and worker counts");
  const char* configs[] = {
      "--problem vc --param cluster --n 9 --k-max 3 --count 6 --seed 17",
      "--problem cvc --param split --n 9 --k-max 2 --count 4 --seed 3",
      "--problem col --param cchordal --n 8 --k-max 2 --count 4 --seed 5",
      "--problem tp --param ccluster --n 10 --k-max 2 --count 4 --seed 11",
  };
  for (const char* cfg : configs) {
    const std::string a = bench(std::string(cfg) + " --workers 1", "det_a.csv");
    const std::string b = bench(std::string(cfg) + " --workers 1", "det_b.csv");
    const std::string c = bench(std::string(cfg) + " --workers 4", "det_c.csv");
    crit.check(a.rfind("seed,class,", 0) == 0 && a.size() > 100, std::string(cfg) + ": no table");
    crit.check(a == b, std::string(cfg) + ": repeated run differs");
    crit.check(a == c, std::string(cfg) + ": multi-worker run differs");
  }
  std::remove("det_a.csv");
  std::remove("det_b.csv");
  std::remove("det_c.csv");
  return crit.finish();
}
