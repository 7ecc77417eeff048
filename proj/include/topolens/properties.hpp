#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topolens/space.hpp"

namespace topolens {

struct SpaceProperties {
  bool t0 = false;
  bool t1 = false;
  bool hausdorff = false;
  bool compact = false;
  bool noetherian = false;
  bool locally_compact = false;
  bool core_compact = false;
  bool sober = false;
  bool well_filtered = false;
  bool monotone_convergence = false;
  bool coherent = false;
  bool weakly_coherent = false;
  bool weakly_hausdorff = false;
  bool locally_strongly_sober = false;
  bool stably_locally_compact = false;
  /// Presumptive reading of "strongly sober": locally strongly sober and
  /// compact. The term has no definition to check against.
  bool strongly_sober_presumptive = false;

  bool operator==(const SpaceProperties&) const = default;
};

/// Every flag by quantifier elimination over the finite structure. Runs
/// both weak-Hausdorff algorithms and both compactness methods and throws
/// InvariantViolation if either pair disagrees.
SpaceProperties property_report(const FinSpace& space);

/// A point pair or compact-saturated pair with an open W around the
/// intersection that contains no U /\ V.
struct WeakHausdorffWitness {
  PointSet first;
  PointSet second;
  PointSet w;
};

/// Pointwise form: for all x, y and open W around up(x) /\ up(y), some open
/// U containing x and V containing y have U /\ V inside W.
std::optional<WeakHausdorffWitness> weakly_hausdorff_pointwise(const FinSpace& space);

/// Compact-saturated form: for all compact saturated Q1, Q2 and open W
/// around Q1 /\ Q2, some open U around Q1 and V around Q2 have U /\ V
/// inside W.
std::optional<WeakHausdorffWitness> weakly_hausdorff_compact_pairs(const FinSpace& space);

/// Compact saturated subsets in increasing numeric order.
std::vector<PointSet> compact_saturated_sets(const FinSpace& space);

/// Every irreducible closed set has exactly one generic point.
bool is_sober(const FinSpace& space);

/// Names of the implication laws that `p` breaks. Empty on every finite
/// space.
std::vector<std::string> law_violations(const SpaceProperties& p);

}  // namespace topolens
