#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace topolens {

/// Largest carrier a FinSpace can hold. Hyperspaces over 6-point spaces
/// need up to 63 points, so point sets are a single 64-bit word.
inline constexpr int kMaxCarrier = 64;

/// A subset of {0, ..., n-1}, n <= 64, stored as a machine word.
class PointSet {
 public:
  using Word = std::uint64_t;

  constexpr PointSet() = default;
  constexpr explicit PointSet(Word bits) : bits_(bits) {}
  PointSet(std::initializer_list<int> points) {
    for (int p : points) bits_ |= Word{1} << p;
  }

  static constexpr PointSet full(int n) {
    return PointSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }
  static constexpr PointSet single(int x) { return PointSet(Word{1} << x); }
  static PointSet of(const std::vector<int>& points) {
    PointSet s;
    for (int p : points) s.bits_ |= Word{1} << p;
    return s;
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(PointSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(PointSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr PointSet with(int x) const { return PointSet(bits_ | (Word{1} << x)); }
  constexpr PointSet without(int x) const {
    return PointSet(bits_ & ~(Word{1} << x));
  }
  constexpr PointSet minus(PointSet other) const {
    return PointSet(bits_ & ~other.bits_);
  }
  constexpr PointSet complement(int n) const {
    return PointSet(~bits_ & full(n).bits_);
  }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr PointSet& operator&=(PointSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const PointSet&) const = default;
  constexpr auto operator<=>(const PointSet&) const = default;

  /// Forward iteration over members in increasing order.
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  Word bits_ = 0;
};

}  // namespace topolens
