#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace epa {

using Vertex = int;

/// Membership bitset over the dense vertex ids 0..universe()-1.
///
/// Set algebra requires both operands to share the same universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  template <class Range>
  static VertexSet from(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return n_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    if (v < 0 || static_cast<std::size_t>(v) >= n_) return false;
    return (words_[static_cast<std::size_t>(v) >> 6] >> (static_cast<std::size_t>(v) & 63)) & 1U;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  /// Lowest member >= from, or -1.
  Vertex next(Vertex from = 0) const noexcept;
  Vertex first() const noexcept { return next(0); }

  std::vector<Vertex> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  std::size_t intersection_size(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  void trim() noexcept;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order of the ascending member lists; the tie-break used
/// whenever several solutions of equal value compete.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace epa
