#include "epa/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace epa {

namespace {
std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
}  // namespace

VertexSet::VertexSet(std::size_t universe) : n_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n_) throw std::out_of_range("vertex id outside universe");
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (static_cast<std::size_t>(v) & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n_) throw std::out_of_range("vertex id outside universe");
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(v) & 63));
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

Vertex VertexSet::next(Vertex from) const noexcept {
  if (from < 0) from = 0;
  auto i = static_cast<std::size_t>(from);
  if (i >= n_) return -1;
  std::size_t w = i >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

void VertexSet::trim() noexcept {
  if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  Vertex x = a.first();
  Vertex y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next(x + 1);
    y = b.next(y + 1);
  }
  return x < 0 && y >= 0;
}

}  // namespace epa
