#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "proxideal/error.hpp"

namespace proxideal {

// Ground sets are capped so that a subset fits in one machine word.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of the points {0, ..., universe-1} of one space.
///
/// Stored as a bit mask. Iteration is in ascending index order, and the
/// total order (operator<) is numeric order of the mask, which is the
/// canonical order used for enumerated ideals.
class Subset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Point;
    using difference_type = std::ptrdiff_t;
    using pointer = Point const*;
    using reference = Point;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Point operator*() const { return static_cast<Point>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(iterator const&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(check_universe(universe)) {}
  Subset(std::size_t universe, std::initializer_list<Point> members);
  Subset(std::size_t universe, std::vector<Point> const& members);

  static Subset full(std::size_t universe);
  static Subset from_bits(std::size_t universe, std::uint64_t bits);

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }

  bool contains(Point p) const noexcept { return p < universe_ && ((bits_ >> p) & 1U) != 0; }
  void insert(Point p);
  void erase(Point p) noexcept {
    if (p < universe_) bits_ &= ~(std::uint64_t{1} << p);
  }

  bool is_subset_of(Subset const& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool intersects(Subset const& other) const noexcept { return (bits_ & other.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  Point front() const noexcept { return static_cast<Point>(std::countr_zero(bits_)); }

  std::vector<Point> members() const;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  Subset& operator|=(Subset const& other);
  Subset& operator&=(Subset const& other);
  Subset& operator-=(Subset const& other);

  friend Subset operator|(Subset a, Subset const& b) { return a |= b; }
  friend Subset operator&(Subset a, Subset const& b) { return a &= b; }
  friend Subset operator-(Subset a, Subset const& b) { return a -= b; }

  friend bool operator==(Subset const& a, Subset const& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }
  friend bool operator<(Subset const& a, Subset const& b) {
    return a.universe_ != b.universe_ ? a.universe_ < b.universe_ : a.bits_ < b.bits_;
  }

 private:
  static std::size_t check_universe(std::size_t universe);
  void check_same(Subset const& other) const;

  std::uint64_t bits_ = 0;
  std::size_t universe_ = 0;
};

inline std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace proxideal
