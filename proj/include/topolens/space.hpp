#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "topolens/point_set.hpp"

namespace topolens {

/// Carrier cap for the property checkers, which quantify over all subsets.
inline constexpr int kMaxCheckedPoints = 16;

/// Default cap on the number of open sets materialized by FinSpace::opens().
inline constexpr std::size_t kDefaultOpenCap = std::size_t{1} << 16;

/// A preorder on {0, ..., n-1}, stored as the up-set of every point.
class Preorder {
 public:
  Preorder() = default;

  /// Reflexive-transitive closure of `pairs` (x <= y). With
  /// `require_transitive`, input whose closure adds a non-reflexive pair is
  /// rejected instead.
  static Preorder from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                             bool require_transitive = false);

  /// `up[x]` must contain x and be closed under the relation it describes.
  static Preorder from_up_sets(std::vector<PointSet> up);

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int x, int y) const { return up_[x].contains(y); }
  PointSet up(int x) const { return up_[x]; }
  PointSet down(int x) const { return down_[x]; }
  bool is_partial_order() const;
  /// All non-reflexive pairs, sorted.
  std::vector<std::pair<int, int>> strict_pairs() const;

  bool operator==(const Preorder& o) const { return up_ == o.up_; }

 private:
  explicit Preorder(std::vector<PointSet> up);

  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

/// A finite topological space on points {0, ..., n-1}.
///
/// Every finite topology is Alexandroff, so the space is stored as the
/// minimal open neighbourhood of each point; open sets are exactly the
/// unions of those, and are materialized on demand by opens().
class FinSpace {
 public:
  FinSpace() = default;

  /// Validates that `opens` contains the empty and full sets and is closed
  /// under binary union and intersection.
  static FinSpace from_opens(int n, const std::vector<PointSet>& opens);

  /// Minimal neighbourhoods must contain their point and satisfy
  /// y in nbhd(x) => nbhd(y) subset of nbhd(x).
  static FinSpace from_min_neighbourhoods(std::vector<PointSet> nbhd);

  int size() const { return static_cast<int>(up_.size()); }
  PointSet points() const { return PointSet::full(size()); }

  /// Smallest open set containing x, which is also the up-set of x in the
  /// specialization preorder.
  PointSet min_neighbourhood(int x) const { return up_[x]; }
  /// Closure of {x}.
  PointSet point_closure(int x) const { return down_[x]; }

  PointSet upset(PointSet a) const;
  PointSet downset(PointSet a) const;
  bool is_open(PointSet a) const { return upset(a) == a; }
  bool is_closed(PointSet a) const { return downset(a) == a; }
  /// Fast closure: the closure of a finite union is the union of point
  /// closures. hulls() recomputes it from the closed sets.
  PointSet closure(PointSet a) const { return downset(a); }
  PointSet interior(PointSet a) const;

  /// All open sets in increasing numeric order. Throws CapacityError when
  /// more than `cap` would be produced.
  std::vector<PointSet> opens(std::size_t cap = kDefaultOpenCap) const;
  /// Complements of opens(), in increasing numeric order.
  std::vector<PointSet> closed_sets(std::size_t cap = kDefaultOpenCap) const;

  bool operator==(const FinSpace& o) const { return up_ == o.up_; }

 private:
  explicit FinSpace(std::vector<PointSet> up);

  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

/// Smallest topology on n points containing every member of `subbasis`.
FinSpace build_space(int n, const std::vector<PointSet>& subbasis);

/// x <= y iff every open neighbourhood of x contains y.
Preorder specialization_preorder(const FinSpace& space);

/// Open sets are the upward-closed sets of `p`.
FinSpace alexandroff_space(const Preorder& p);

/// Every preorder on n labelled points (n <= 5).
std::vector<Preorder> all_preorders(int n);

/// Random preorder: each ordered pair is related with probability
/// `density`, followed by transitive closure.
Preorder random_preorder(int n, double density, std::mt19937_64& rng);

/// Draw in [0, bound) straight from the engine so sequences are identical
/// across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);
double draw_unit(std::mt19937_64& rng);

struct Hulls {
  PointSet closure;
  PointSet saturation;
  PointSet upset;
  PointSet downset;
};

/// closure = intersection of closed supersets, saturation = intersection of
/// open supersets, both computed from the enumerated topology.
Hulls hulls(const FinSpace& space, PointSet a);

struct IrreducibleClosed {
  PointSet set;
  /// Points x with closure({x}) == set; empty or several on non-sober spaces.
  PointSet generic_points;
};

/// Non-empty closed C such that whenever C meets two opens it meets their
/// intersection. Sorted by the bits of C.
std::vector<IrreducibleClosed> irreducible_closed_sets(const FinSpace& space);

enum class CompactnessMethod { kOpenCover, kFilteredClosed };

bool is_compact(const FinSpace& space, PointSet a, CompactnessMethod method);

/// The ultrafilter {A | base_point in A}; on a finite carrier every
/// ultrafilter has this form.
struct PrincipalUltrafilter {
  int base_point = 0;
};

/// Limit set of a principal ultrafilter, computed from the definition and
/// from the intersection of closures of its members. Throws
/// InvariantViolation if the two disagree.
PointSet ultrafilter_limits(const FinSpace& space, PrincipalUltrafilter u);

}  // namespace topolens
