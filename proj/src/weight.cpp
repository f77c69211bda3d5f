#include "epa/weight.hpp"

#include "epa/error.hpp"

namespace epa {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

WeightFn::WeightFn(std::vector<Rational> weights) : w_(std::move(weights)) {
  for (auto& x : w_) {
    x.canonicalize();
    if (sgn(x) < 0) throw PreconditionError("vertex weights must be nonnegative");
  }
}

WeightFn WeightFn::unit(int n) { return WeightFn(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))); }

Rational WeightFn::total(const VertexSet& s) const {
  Rational sum = 0;
  s.for_each([&](Vertex v) { sum += w_.at(static_cast<std::size_t>(v)); });
  return sum;
}

Rational WeightFn::total() const {
  Rational sum = 0;
  for (const auto& x : w_) sum += x;
  return sum;
}

bool WeightFn::is_unit() const {
  for (const auto& x : w_)
    if (x != 1) return false;
  return true;
}

WeightFn WeightFn::restrict(std::span<const Vertex> to_parent) const {
  std::vector<Rational> out;
  out.reserve(to_parent.size());
  for (Vertex p : to_parent) out.push_back(w_.at(static_cast<std::size_t>(p)));
  return WeightFn(std::move(out));
}

}  // namespace epa
