#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace topolens {

/// A set of lattice elements, indexed 0..m-1.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Element cap: meet and join are stored as full m x m tables.
inline constexpr int kMaxLatticeElements = 1024;

/// A finite lattice. Meet and join tables are validated against the order
/// on construction, so every downstream checker may assume lattice laws.
class FinLattice {
 public:
  FinLattice() = default;

  /// Reflexive-transitive closure of `leq` pairs (a <= b); meet and join are
  /// derived. Throws InputError unless the result is a lattice.
  static FinLattice from_order(int m, const std::vector<std::pair<int, int>>& leq);

  /// Tables indexed [a * m + b]. `up[a]` = {b | a <= b}.
  static FinLattice from_tables(std::vector<ElementSet> up, std::vector<int> meet,
                                std::vector<int> join);

  int size() const { return m_; }
  bool leq(int a, int b) const { return up_[a].test(b); }
  const ElementSet& up(int a) const { return up_[a]; }
  const ElementSet& down(int a) const { return down_[a]; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * m_ + b]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * m_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Join of a family; bottom for the empty family.
  int join_of(const ElementSet& s) const;
  /// Meet of a family; top for the empty family.
  int meet_of(const ElementSet& s) const;

  ElementSet no_elements() const { return ElementSet(m_); }
  ElementSet all_elements() const { return ElementSet(m_).set(); }
  /// Order pairs a < b, sorted.
  std::vector<std::pair<int, int>> strict_pairs() const;

 private:
  void validate_and_finish();

  int m_ = 0;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = 0;
  int top_ = 0;
};

/// Members of `s` in increasing order.
std::vector<int> elements_of(const ElementSet& s);
ElementSet element_set(int m, const std::vector<int>& members);

/// Canonical small lattices used as fixtures.
FinLattice chain_lattice(int m);
FinLattice boolean_lattice(int atoms);
FinLattice diamond_m3();
FinLattice pentagon_n5();

}  // namespace topolens
