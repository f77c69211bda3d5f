#pragma once

#include <chrono>
#include <cstdio>
#include <string>

namespace epa::testing {

/// Tallies one criterion and prints its single PASS/FAIL line.
class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)), t0_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      if (++failures_ <= 5) std::fprintf(stderr, "  violation: %s\n", what.c_str());
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

  /// Prints the line and returns the process exit code.
  int finish(double time_limit_s = 0) {
    const double s = seconds();
    const bool slow = time_limit_s > 0 && s > time_limit_s;
    const bool ok = failures_ == 0 && checks_ > 0 && !slow;
    std::printf("%s criterion %d: %s (%ld checks, %ld violations, %.1fs%s%s%s)\n", ok ? "PASS" : "FAIL", id_,
                title_.c_str(), checks_, failures_, s, slow ? ", over time limit" : "", notes_.empty() ? "" : "; ",
                notes_.c_str());
    return ok ? 0 : 1;
  }

 private:
  int id_;
  std::string title_;
  std::chrono::steady_clock::time_point t0_;
  long checks_ = 0;
  long failures_ = 0;
  std::string notes_;
};

}  // namespace epa::testing
