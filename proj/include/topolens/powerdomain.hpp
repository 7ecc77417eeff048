#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topolens/space.hpp"

namespace topolens {

struct Lens {
  PointSet members;
  bool operator==(const Lens&) const = default;
  auto operator<=>(const Lens&) const = default;
};

struct QuasiLens {
  PointSet q;
  PointSet c;
  bool operator==(const QuasiLens&) const = default;
  auto operator<=>(const QuasiLens&) const = default;
};

/// Lenses sorted by member bits. Computes both enumerations below and throws
/// InvariantViolation if they differ.
std::vector<Lens> lenses(const FinSpace& space);
/// Non-empty Q /\ C over saturated Q and closed C.
std::vector<Lens> lenses_by_intersection(const FinSpace& space);
/// Non-empty L with L = up(L) /\ cl(L).
std::vector<Lens> lenses_by_fixed_point(const FinSpace& space);

bool is_lens(const FinSpace& space, PointSet l);
/// Saturated q, closed c, and the three conditions, the third checked
/// against every open U containing q.
bool is_quasi_lens(const FinSpace& space, const QuasiLens& ql);
/// Sorted by (q, c).
std::vector<QuasiLens> quasi_lenses(const FinSpace& space);

/// (up L, cl L). Throws InputError if `l` is not a lens.
QuasiLens iota(const FinSpace& space, const Lens& l);
/// Q /\ C. Throws InputError if `ql` is not a quasi-lens.
Lens rho(const FinSpace& space, const QuasiLens& ql);

enum class HyperspaceKind { kLensVietoris, kQuasiVietoris };

/// Carrier point i is lenses[i] (resp. quasi[i]). box[k] and diamond[k] are
/// the subbasic opens for base_opens[k].
struct Hyperspace {
  HyperspaceKind kind = HyperspaceKind::kLensVietoris;
  FinSpace space;
  std::vector<Lens> lenses;
  std::vector<QuasiLens> quasi;
  std::vector<PointSet> base_opens;
  std::vector<PointSet> box;
  std::vector<PointSet> diamond;
};

/// Throws CapacityError when the carrier exceeds 64 points.
Hyperspace hyperspace(const FinSpace& space, HyperspaceKind kind);

/// up L contains up L' and cl L inside cl L'; the closure is the
/// intersection of closed supersets.
bool tem_leq(const FinSpace& space, const Lens& a, const Lens& b);
/// up L contains up L' and down L inside down L'.
bool em_leq(const FinSpace& space, const Lens& a, const Lens& b);

struct HyperspaceReport {
  int lens_count = 0;
  int quasi_lens_count = 0;
  bool iota_injective = false;
  bool iota_surjective = false;
  bool iota_homeomorphism = false;
  bool rho_iota_identity = false;
  bool iota_rho_identity = false;
  bool box_preimages_match = false;
  bool diamond_preimages_match = false;
  bool tem_equals_em = false;
  bool tem_equals_vietoris_specialization = false;
  bool all_downsets_closed = false;
  std::vector<std::string> witnesses;

  /// Every flag above.
  bool all_hold() const;
};

/// Both entry points run the whole battery; they differ only in name.
HyperspaceReport order_report(const FinSpace& space);
HyperspaceReport check_embedding(const FinSpace& space);

struct LemmaCheck {
  bool holds = true;
  /// (Q, C) satisfying the hypothesis but not the conclusion.
  std::optional<QuasiLens> witness;
};

/// For every saturated Q (the empty set included) and closed C: if C lies
/// in cl(U /\ C) for every open U around Q, then C lies in cl(Q /\ C).
LemmaCheck lemma_hypothesis_check(const FinSpace& space);

std::string format_set(PointSet s);
std::string format_quasi_lens(const QuasiLens& ql);

/// Hasse diagram of (lenses, TEM order).
std::string lens_order_dot(const FinSpace& space);
/// Hasse diagram of the specialization order on the quasi-lens hyperspace.
std::string quasi_lens_dot(const FinSpace& space);

}  // namespace topolens
