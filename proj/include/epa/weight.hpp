#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "epa/vertex_set.hpp"

namespace epa {

/// Exact arbitrary-precision rational; all weights and bounds use it.
using Rational = mpq_class;

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Nonnegative rational vertex weights, one per vertex.
class WeightFn {
 public:
  WeightFn() = default;
  explicit WeightFn(std::vector<Rational> weights);

  static WeightFn unit(int n);

  int size() const noexcept { return static_cast<int>(w_.size()); }
  const Rational& operator[](Vertex v) const { return w_.at(static_cast<std::size_t>(v)); }
  const std::vector<Rational>& values() const noexcept { return w_; }

  Rational total(const VertexSet& s) const;
  Rational total() const;
  bool is_unit() const;

  /// Weights of a child instance whose vertex i is `to_parent[i]` here.
  WeightFn restrict(std::span<const Vertex> to_parent) const;

  friend bool operator==(const WeightFn& a, const WeightFn& b) { return a.w_ == b.w_; }

 private:
  std::vector<Rational> w_;
};

}  // namespace epa
