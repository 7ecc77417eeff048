#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "topolens/lattice.hpp"
#include "topolens/space.hpp"

namespace topolens {

/// The frame of opens of a space. Element i is opens[i]; opens are in
/// increasing numeric order, so element 0 is the empty set.
struct OpenLattice {
  FinLattice lattice;
  std::vector<PointSet> opens;

  /// Index of an open set; -1 if `u` is not open.
  int index_of(PointSet u) const;
};

OpenLattice lattice_of_opens(const FinSpace& space);

/// Action of a continuous map f: X -> Y on opens: element i of O(Y) goes to
/// the index of f^{-1}(V_i) in O(X). Throws InputError if f is not
/// continuous or not a map between the carriers.
std::vector<int> preimage_map(const std::vector<int>& f, const FinSpace& x, const FinSpace& y);

struct FrameReport {
  bool is_frame = false;
  bool is_boolean = false;
  /// (u, v, w) with u /\ (v \/ w) != (u /\ v) \/ (u /\ w).
  std::optional<std::array<int, 3>> distributivity_witness;
  /// An element without a complement, when not Boolean.
  std::optional<int> uncomplemented;
};

FrameReport frame_report(const FinLattice& l);

struct Filter {
  ElementSet members;
  bool proper = false;
  bool scott_open = false;
  bool completely_prime = false;
};

enum class FilterKind { kAll, kScottOpen, kCompletelyPrime };

/// Non-empty, upward-closed, closed under binary meet.
bool is_filter(const FinLattice& l, const ElementSet& s);

/// Upward-closed and inaccessible by directed joins. Every directed family
/// D of a finite lattice contains its own join, so the directed families
/// with join s are exactly those containing s as greatest element; the
/// check runs over those principal families.
bool is_scott_open(const FinLattice& l, const ElementSet& s);

/// Filter F with: join of any family in F => some member in F. The family
/// most likely to escape F is everything outside F, so F is completely prime
/// iff the join of its complement lies outside F.
bool is_completely_prime(const FinLattice& l, const ElementSet& f);

/// Every filter of the requested kind, sorted by size then members.
///
/// A filter on a finite lattice contains the meet of its members, so the
/// candidates are the principal up-sets; each is re-validated with
/// is_filter().
std::vector<Filter> filters_of(const FinLattice& l, FilterKind kind);

Filter make_filter(const FinLattice& l, const ElementSet& members);

struct FilterJoin {
  ElementSet members;
  /// Both hold on every frame; a non-distributive lattice can break either.
  bool is_filter = false;
  bool is_least_upper_bound = false;
};

/// {u /\ v | u in F, v in G}, checked against every filter above F and G.
/// Throws InputError if F or G is not a filter.
FilterJoin filter_join(const FinLattice& l, const ElementSet& f, const ElementSet& g);

struct TemperanceReport {
  bool is_frame = false;
  bool locally_temperate = false;
  bool temperate = false;
  /// Indices into filters_of(kScottOpen) of a pair whose join is not
  /// Scott-open.
  std::optional<std::pair<int, int>> witness;
  std::string note;
};

TemperanceReport temperance_report(const FinLattice& l);

/// pt(L): carrier = completely prime filters, opens O_u = {x | u in x}.
struct PointsSpace {
  FinSpace space;
  std::vector<ElementSet> points;
  /// open_of[u] = O_u.
  std::vector<PointSet> open_of;
};

PointsSpace points_space(const FinLattice& l);

struct DualityReport {
  bool unit_lands_in_points = false;
  bool unit_injective = false;
  bool unit_surjective = false;
  bool unit_continuous = false;
  bool unit_open_map = false;
  bool unit_homeomorphism = false;
  bool spatial = false;
  bool hm_bijection = false;
  bool hm_order_reversing = false;
  int scott_open_filter_count = 0;
  int compact_saturated_count = 0;
  std::vector<std::string> warnings;
  std::vector<std::string> witnesses;
};

/// Unit x -> {U | x in U} into pt(O(X)), and counit u -> O_u from O(X) to
/// O(pt(O(X))).
DualityReport stone_round_trip(const FinSpace& space);

/// F -> intersection of F against Q -> {U open | Q subset U}, between
/// Scott-open filters on O(X) and compact saturated sets. With
/// `include_improper`, the improper filter and the empty set take part.
DualityReport hofmann_mislove_report(const FinSpace& space, bool include_improper = true);

struct WayBelowReport {
  /// waybelow[u] = {v | u << v}.
  std::vector<ElementSet> waybelow;
  bool waybelow_equals_leq = false;
  bool continuous = false;
  bool stable = false;
  bool locally_temperate = false;
  /// stable == locally_temperate, or the lattice is not a continuous frame.
  bool stable_iff_locally_temperate = false;
  std::optional<std::array<int, 3>> stability_witness;
};

/// u << v iff every directed family whose join is above v has a member above
/// u. Directed families are reduced to their greatest element, as in
/// is_scott_open().
WayBelowReport waybelow_and_stability(const FinLattice& l);

/// Way-below alone, without the temperance cross-check.
std::vector<ElementSet> waybelow_relation(const FinLattice& l);
bool is_continuous(const FinLattice& l, const std::vector<ElementSet>& waybelow);

}  // namespace topolens
