#include "topolens/properties.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "topolens/errors.hpp"
#include "topolens/frames.hpp"

namespace topolens {

namespace {

bool by_size_then_bits(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Shared enumeration state for one space.
class Context {
 public:
  explicit Context(const FinSpace& space)
      : space_(space),
        n_(space.size()),
        opens_(space.opens()),
        by_size_(opens_),
        memo_(std::size_t{1} << n_, -1) {
    std::sort(by_size_.begin(), by_size_.end(), by_size_then_bits);
    containing_.resize(n_);
    for (PointSet u : by_size_) {
      for (int x : u) containing_[x].push_back(u);
    }
  }

  const FinSpace& space() const { return space_; }
  int n() const { return n_; }
  const std::vector<PointSet>& opens() const { return opens_; }
  /// Opens containing x, smallest first.
  const std::vector<PointSet>& containing(int x) const { return containing_[x]; }
  /// Opens including q, smallest first.
  std::vector<PointSet> around(PointSet q) const {
    std::vector<PointSet> out;
    for (PointSet u : by_size_) {
      if (q.subset_of(u)) out.push_back(u);
    }
    return out;
  }

  /// Compactness by both methods; they must agree.
  bool compact(PointSet a) {
    std::int8_t& slot = memo_[a.bits()];
    if (slot >= 0) return slot != 0;
    const bool by_cover = is_compact(space_, a, CompactnessMethod::kOpenCover);
    const bool by_closed = is_compact(space_, a, CompactnessMethod::kFilteredClosed);
    if (by_cover != by_closed) {
      throw InvariantViolation("compactness methods disagree on a set of size " +
                               std::to_string(a.size()));
    }
    slot = by_cover ? 1 : 0;
    return by_cover;
  }

 private:
  const FinSpace& space_;
  int n_;
  std::vector<PointSet> opens_;
  std::vector<PointSet> by_size_;
  std::vector<std::vector<PointSet>> containing_;
  std::vector<std::int8_t> memo_;
};

// Some U in `us`, V in `vs` with U /\ V inside w.
bool separated_inside(const std::vector<PointSet>& us, const std::vector<PointSet>& vs,
                      PointSet w) {
  for (PointSet u : us) {
    for (PointSet v : vs) {
      if ((u & v).subset_of(w)) return true;
    }
  }
  return false;
}

std::optional<WeakHausdorffWitness> wh_pointwise(const Context& ctx) {
  for (int x = 0; x < ctx.n(); ++x) {
    for (int y = x; y < ctx.n(); ++y) {
      const PointSet target =
          ctx.space().min_neighbourhood(x) & ctx.space().min_neighbourhood(y);
      for (PointSet w : ctx.opens()) {
        if (!target.subset_of(w)) continue;
        if (!separated_inside(ctx.containing(x), ctx.containing(y), w)) {
          return WeakHausdorffWitness{PointSet::single(x), PointSet::single(y), w};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<PointSet> compact_saturated(Context& ctx) {
  std::vector<PointSet> out;
  for (PointSet q : ctx.opens()) {
    if (ctx.compact(q)) out.push_back(q);
  }
  return out;
}

std::optional<WeakHausdorffWitness> wh_compact_pairs(Context& ctx) {
  const std::vector<PointSet> cs = compact_saturated(ctx);
  std::vector<std::vector<PointSet>> around(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) around[i] = ctx.around(cs[i]);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i; j < cs.size(); ++j) {
      const PointSet target = cs[i] & cs[j];
      for (PointSet w : ctx.opens()) {
        if (!target.subset_of(w)) continue;
        if (!separated_inside(around[i], around[j], w)) {
          return WeakHausdorffWitness{cs[i], cs[j], w};
        }
      }
    }
  }
  return std::nullopt;
}

bool locally_compact(Context& ctx) {
  for (int x = 0; x < ctx.n(); ++x) {
    for (PointSet u : ctx.containing(x)) {
      bool found = false;
      for (PointSet v : ctx.containing(x)) {
        if (!v.subset_of(u)) continue;
        // Look for a compact K with V <= K <= U.
        const PointSet slack = u.minus(v);
        PointSet::Word extra = slack.bits();
        while (true) {
          if (ctx.compact(v | PointSet(extra))) {
            found = true;
            break;
          }
          if (extra == 0) break;
          extra = (extra - 1) & slack.bits();
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool well_filtered(Context& ctx, const std::vector<PointSet>& cs) {
  // A filtered family on a finite carrier has a least member; the largest
  // family with least member Q is every compact saturated superset of Q.
  for (PointSet q : cs) {
    std::vector<PointSet> family;
    PointSet meet = ctx.space().points();
    for (PointSet p : cs) {
      if (q.subset_of(p)) {
        family.push_back(p);
        meet &= p;
      }
    }
    for (PointSet u : ctx.opens()) {
      const bool meet_inside = meet.subset_of(u);
      const bool member_inside = std::any_of(family.begin(), family.end(),
                                             [u](PointSet p) { return p.subset_of(u); });
      if (meet_inside != member_inside) return false;
    }
  }
  return true;
}

bool monotone_convergence(const Context& ctx, bool t0) {
  const FinSpace& s = ctx.space();
  const PointSet::Word total = PointSet::full(ctx.n()).bits();
  for (PointSet::Word bits = 1; bits != 0 && bits <= total; ++bits) {
    const PointSet d(bits);
    bool directed = true;
    for (int a : d) {
      for (int b : d) {
        if (!(s.min_neighbourhood(a) & s.min_neighbourhood(b)).intersects(d)) {
          directed = false;
          break;
        }
      }
      if (!directed) break;
    }
    if (!directed) continue;
    PointSet upper = s.points();
    for (int a : d) upper &= s.min_neighbourhood(a);
    int sup = -1;
    for (int c : upper) {
      if (upper.subset_of(s.min_neighbourhood(c))) {
        sup = c;
        break;
      }
    }
    if (sup < 0) return false;
    for (PointSet u : ctx.opens()) {
      if (u.contains(sup) && !u.intersects(d)) return false;
    }
    if (bits == total) break;
  }
  return t0;
}

bool locally_strongly_sober(const FinSpace& s) {
  for (int x = 0; x < s.size(); ++x) {
    const PointSet lim = ultrafilter_limits(s, PrincipalUltrafilter{x});
    if (lim.empty()) continue;
    int generic = 0;
    for (int z = 0; z < s.size(); ++z) {
      if (s.point_closure(z) == lim) ++generic;
    }
    if (generic != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<WeakHausdorffWitness> weakly_hausdorff_pointwise(const FinSpace& space) {
  if (space.size() > kMaxCheckedPoints) throw CapacityError("weak Hausdorff check capped at 16 points");
  Context ctx(space);
  return wh_pointwise(ctx);
}

std::optional<WeakHausdorffWitness> weakly_hausdorff_compact_pairs(const FinSpace& space) {
  if (space.size() > kMaxCheckedPoints) throw CapacityError("weak Hausdorff check capped at 16 points");
  Context ctx(space);
  return wh_compact_pairs(ctx);
}

std::vector<PointSet> compact_saturated_sets(const FinSpace& space) {
  if (space.size() > kMaxCheckedPoints) throw CapacityError("compact saturated sets capped at 16 points");
  Context ctx(space);
  return compact_saturated(ctx);
}

bool is_sober(const FinSpace& space) {
  for (const IrreducibleClosed& c : irreducible_closed_sets(space)) {
    if (c.generic_points.size() != 1) return false;
  }
  return true;
}

SpaceProperties property_report(const FinSpace& space) {
  const int n = space.size();
  if (n > kMaxCheckedPoints) throw CapacityError("property report capped at 16 points");
  // The core-compactness check needs the frame of opens; fail early on
  // spaces whose topology is too large for it.
  const OpenLattice frame = lattice_of_opens(space);
  Context ctx(space);
  SpaceProperties p;

  p.t0 = true;
  p.t1 = true;
  p.hausdorff = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const PointSet ux = space.min_neighbourhood(x);
      const PointSet uy = space.min_neighbourhood(y);
      if (ux == uy) p.t0 = false;
      if (ux.contains(y)) p.t1 = false;
      if (ux.intersects(uy)) p.hausdorff = false;
    }
  }

  p.compact = ctx.compact(space.points());
  p.noetherian = true;
  const PointSet::Word total = space.points().bits();
  for (PointSet::Word bits = 0;; ++bits) {
    if (!ctx.compact(PointSet(bits))) {
      p.noetherian = false;
      break;
    }
    if (bits == total) break;
  }

  const std::vector<PointSet> cs = compact_saturated(ctx);
  p.locally_compact = locally_compact(ctx);
  p.core_compact = is_continuous(frame.lattice, waybelow_relation(frame.lattice));
  p.sober = is_sober(space);
  p.well_filtered = well_filtered(ctx, cs);
  p.monotone_convergence = monotone_convergence(ctx, p.t0);

  p.coherent = true;
  for (std::size_t i = 0; i < cs.size() && p.coherent; ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!ctx.compact(cs[i] & cs[j])) {
        p.coherent = false;
        break;
      }
    }
  }
  p.weakly_coherent = true;
  for (int x = 0; x < n && p.weakly_coherent; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!ctx.compact(space.min_neighbourhood(x) & space.min_neighbourhood(y))) {
        p.weakly_coherent = false;
        break;
      }
    }
  }

  const bool wh_points = !wh_pointwise(ctx).has_value();
  const bool wh_pairs = !wh_compact_pairs(ctx).has_value();
  if (wh_points != wh_pairs) {
    throw InvariantViolation("weak Hausdorff algorithms disagree");
  }
  p.weakly_hausdorff = wh_points;
  p.locally_strongly_sober = locally_strongly_sober(space);
  p.stably_locally_compact = p.locally_compact && p.coherent && p.sober;
  p.strongly_sober_presumptive = p.locally_strongly_sober && p.compact;
  return p;
}

std::vector<std::string> law_violations(const SpaceProperties& p) {
  std::vector<std::string> out;
  auto law = [&](bool holds, const char* name) {
    if (!holds) out.emplace_back(name);
  };
  law(p.weakly_hausdorff, "alexandroff_spaces_are_weakly_hausdorff");
  law(p.hausdorff == (p.t1 && p.weakly_hausdorff), "hausdorff_iff_t1_and_weakly_hausdorff");
  law(p.locally_strongly_sober == (p.weakly_hausdorff && p.coherent && p.sober),
      "lss_iff_wh_coherent_sober");
  law(p.locally_strongly_sober ==
          (p.weakly_hausdorff && p.weakly_coherent && p.monotone_convergence),
      "lss_iff_wh_weakly_coherent_monotone_convergence");
  law(!(p.weakly_hausdorff && p.monotone_convergence) || p.sober, "wh_and_mc_implies_sober");
  law(!(p.weakly_hausdorff && p.weakly_coherent) || p.coherent,
      "wh_and_weakly_coherent_implies_coherent");
  law(p.stably_locally_compact == (p.locally_compact && p.locally_strongly_sober),
      "slc_iff_locally_compact_and_lss");
  law(!p.hausdorff || p.t1, "hausdorff_implies_t1");
  law(!p.t1 || p.t0, "t1_implies_t0");
  law(!p.sober || p.t0, "sober_implies_t0");
  law(!p.sober || p.well_filtered, "sober_implies_well_filtered");
  law(!p.coherent || p.weakly_coherent, "coherent_implies_weakly_coherent");
  law(p.sober == p.t0, "finite_sober_iff_t0");
  law(p.monotone_convergence == p.t0, "finite_mc_iff_t0");
  return out;
}

}  // namespace topolens
