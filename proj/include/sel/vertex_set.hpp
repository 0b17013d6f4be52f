#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "sel/errors.hpp"

namespace sel {

// Subset of {0, ..., n-1}, bit-packed into 64-bit words. Word-parallel set
// algebra; immutable sharing across threads is safe once built.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe), w_(words_for(universe), 0) {}

  VertexSet(int universe, std::initializer_list<int> members)
      : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.w_.size(); ++i) s.w_[i] = ~0ULL;
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ULL;
  }

  void insert(int v) {
    check_range(v);
    w_[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
  }

  void erase(int v) {
    check_range(v);
    w_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  // Lowest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & other.w_[i]) return true;
    return false;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  // Set difference.
  VertexSet operator-(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }

  VertexSet complement() const { return full(n_) - *this; }

  bool operator==(const VertexSet& o) const = default;

  const std::uint64_t* words() const { return w_.data(); }
  std::size_t word_count() const { return w_.size(); }

 private:
  static std::size_t words_for(int n) {
    return static_cast<std::size_t>((n + 63) / 64);
  }

  void check_range(int v) const {
    if (v < 0 || v >= n_)
      throw InvalidParameterError("vertex " + std::to_string(v) +
                                  " out of range [0, " + std::to_string(n_) +
                                  ")");
  }

  // Clear padding bits above n_.
  void trim() {
    if (n_ % 64 != 0 && !w_.empty())
      w_.back() &= (1ULL << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace sel
