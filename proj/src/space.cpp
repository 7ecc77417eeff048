#include "topolens/space.hpp"

#include <algorithm>
#include <string>

#include "topolens/errors.hpp"

namespace topolens {

namespace {

void check_carrier(int n) {
  if (n < 0 || n > kMaxCarrier) {
    throw InputError("point count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxCarrier) + "]");
  }
}

std::vector<PointSet> down_sets_of(const std::vector<PointSet>& up) {
  std::vector<PointSet> down(up.size());
  for (int x = 0; x < static_cast<int>(up.size()); ++x) {
    for (int y : up[x]) down[y] = down[y].with(x);
  }
  return down;
}

// Validates reflexivity and transitivity of an up-set table.
void check_up_table(const std::vector<PointSet>& up, const char* what) {
  const int n = static_cast<int>(up.size());
  check_carrier(n);
  const PointSet all = PointSet::full(n);
  for (int x = 0; x < n; ++x) {
    if (!up[x].subset_of(all)) {
      throw InputError(std::string(what) + ": point " + std::to_string(x) +
                       " relates to a point out of range");
    }
    if (!up[x].contains(x)) {
      throw InputError(std::string(what) + ": point " + std::to_string(x) +
                       " is not related to itself");
    }
    for (int y : up[x]) {
      if (!up[y].subset_of(up[x])) {
        throw InputError(std::string(what) + ": not transitive at (" +
                         std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Preorder

Preorder::Preorder(std::vector<PointSet> up)
    : up_(std::move(up)), down_(down_sets_of(up_)) {}

Preorder Preorder::from_up_sets(std::vector<PointSet> up) {
  check_up_table(up, "preorder");
  return Preorder(std::move(up));
}

Preorder Preorder::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                              bool require_transitive) {
  check_carrier(n);
  std::vector<PointSet> up(n);
  for (int x = 0; x < n; ++x) up[x] = PointSet::single(x);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw InputError("preorder pair (" + std::to_string(x) + ", " +
                       std::to_string(y) + ") out of range");
    }
    up[x] = up[x].with(y);
  }
  std::vector<PointSet> closed = up;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (closed[i].contains(k)) closed[i] |= closed[k];
    }
  }
  if (require_transitive) {
    for (int x = 0; x < n; ++x) {
      if (closed[x] != up[x]) {
        const int y = closed[x].minus(up[x]).first();
        throw InputError("preorder is not transitive: (" + std::to_string(x) +
                         ", " + std::to_string(y) + ") is implied but missing");
      }
    }
  }
  return Preorder(std::move(closed));
}

bool Preorder::is_partial_order() const {
  for (int x = 0; x < size(); ++x) {
    if ((up_[x] & down_[x]) != PointSet::single(x)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Preorder::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) {
    for (int y : up_[x]) {
      if (y != x) out.emplace_back(x, y);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// FinSpace

FinSpace::FinSpace(std::vector<PointSet> up)
    : up_(std::move(up)), down_(down_sets_of(up_)) {}

FinSpace FinSpace::from_min_neighbourhoods(std::vector<PointSet> nbhd) {
  check_up_table(nbhd, "minimal neighbourhoods");
  return FinSpace(std::move(nbhd));
}

FinSpace FinSpace::from_opens(int n, const std::vector<PointSet>& opens) {
  check_carrier(n);
  const PointSet all = PointSet::full(n);
  std::vector<PointSet> family(opens);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (PointSet u : family) {
    if (!u.subset_of(all)) throw InputError("open set has a point out of range");
  }
  auto member = [&](PointSet s) {
    return std::binary_search(family.begin(), family.end(), s);
  };
  if (!member(PointSet{})) throw InputError("opens must contain the empty set");
  if (!member(all)) throw InputError("opens must contain the full point set");
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!member(family[i] | family[j])) {
        throw InputError("opens not closed under union");
      }
      if (!member(family[i] & family[j])) {
        throw InputError("opens not closed under intersection");
      }
    }
  }
  std::vector<PointSet> up(n, all);
  for (PointSet u : family) {
    for (int x : u) up[x] &= u;
  }
  FinSpace space(std::move(up));
  if (space.opens() != family) {
    throw InvariantViolation("open family differs from the unions of minimal neighbourhoods");
  }
  return space;
}

PointSet FinSpace::upset(PointSet a) const {
  PointSet out;
  for (int x : a) out |= up_[x];
  return out;
}

PointSet FinSpace::downset(PointSet a) const {
  PointSet out;
  for (int x : a) out |= down_[x];
  return out;
}

PointSet FinSpace::interior(PointSet a) const {
  PointSet out;
  for (int x : a) {
    if (up_[x].subset_of(a)) out = out.with(x);
  }
  return out;
}

std::vector<PointSet> FinSpace::opens(std::size_t cap) const {
  // Decide points in increasing order. Taking x forces its up-set in,
  // dropping x forces its down-set out; neither choice can conflict with
  // earlier decisions, so every leaf is a distinct up-set.
  std::vector<PointSet> out;
  const PointSet all = points();
  struct Frame {
    PointSet in, out;
  };
  std::vector<Frame> stack{{PointSet{}, PointSet{}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const PointSet undecided = all.minus(f.in | f.out);
    if (undecided.empty()) {
      if (out.size() >= cap) {
        throw CapacityError("more than " + std::to_string(cap) + " open sets");
      }
      out.push_back(f.in);
      continue;
    }
    const int x = undecided.first();
    stack.push_back({f.in, f.out | down_[x]});
    stack.push_back({f.in | up_[x], f.out});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> FinSpace::closed_sets(std::size_t cap) const {
  std::vector<PointSet> out;
  for (PointSet u : opens(cap)) out.push_back(u.complement(size()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

FinSpace build_space(int n, const std::vector<PointSet>& subbasis) {
  check_carrier(n);
  const PointSet all = PointSet::full(n);
  for (PointSet s : subbasis) {
    if (!s.subset_of(all)) throw InputError("subbasis member has a point out of range");
  }
  // The smallest open around x is the intersection of the subbasic sets
  // containing it (empty intersection = whole space).
  std::vector<PointSet> up(n, all);
  for (PointSet s : subbasis) {
    for (int x : s) up[x] &= s;
  }
  return FinSpace::from_min_neighbourhoods(std::move(up));
}

Preorder specialization_preorder(const FinSpace& space) {
  std::vector<PointSet> up(space.size());
  for (int x = 0; x < space.size(); ++x) up[x] = space.min_neighbourhood(x);
  return Preorder::from_up_sets(std::move(up));
}

FinSpace alexandroff_space(const Preorder& p) {
  std::vector<PointSet> up(p.size());
  for (int x = 0; x < p.size(); ++x) up[x] = p.up(x);
  return FinSpace::from_min_neighbourhoods(std::move(up));
}

std::vector<Preorder> all_preorders(int n) {
  if (n < 0 || n > 5) throw CapacityError("preorder enumeration is capped at 5 points");
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  std::vector<Preorder> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<PointSet> up(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int x = 0; x < n; ++x) up[x] = PointSet::single(x);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1U) up[slots[i].first] = up[slots[i].first].with(slots[i].second);
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x) {
      for (int y : up[x]) {
        if (!up[y].subset_of(up[x])) {
          transitive = false;
          break;
        }
      }
    }
    if (transitive) out.push_back(Preorder::from_up_sets(up));
  }
  return out;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Preorder random_preorder(int n, double density, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && draw_unit(rng) < density) pairs.emplace_back(x, y);
    }
  }
  return Preorder::from_pairs(n, pairs);
}

// ---------------------------------------------------------------------------
// Derived structure

Hulls hulls(const FinSpace& space, PointSet a) {
  Hulls h;
  h.closure = space.points();
  for (PointSet c : space.closed_sets()) {
    if (a.subset_of(c)) h.closure &= c;
  }
  h.saturation = space.points();
  for (PointSet u : space.opens()) {
    if (a.subset_of(u)) h.saturation &= u;
  }
  h.upset = space.upset(a);
  h.downset = space.downset(a);
  return h;
}

std::vector<IrreducibleClosed> irreducible_closed_sets(const FinSpace& space) {
  const std::vector<PointSet> opens = space.opens();
  std::vector<IrreducibleClosed> out;
  std::vector<PointSet> meeting;
  for (PointSet c : space.closed_sets()) {
    if (c.empty()) continue;
    meeting.clear();
    for (PointSet u : opens) {
      if (u.intersects(c)) meeting.push_back(u);
    }
    bool irreducible = true;
    for (std::size_t i = 0; i < meeting.size() && irreducible; ++i) {
      for (std::size_t j = i + 1; j < meeting.size(); ++j) {
        if (!(meeting[i] & meeting[j]).intersects(c)) {
          irreducible = false;
          break;
        }
      }
    }
    if (!irreducible) continue;
    PointSet generic;
    for (int x : c) {
      if (space.point_closure(x) == c) generic = generic.with(x);
    }
    out.push_back({c, generic});
  }
  return out;
}

bool is_compact(const FinSpace& space, PointSet a, CompactnessMethod method) {
  if (method == CompactnessMethod::kOpenCover) {
    // Any open cover yields a subcover by choosing, for each point of A, one
    // member containing it. Run that extraction on the cover of A by every
    // open set meeting A; it fails only if some point is left uncovered.
    std::vector<PointSet> cover;
    for (PointSet u : space.opens()) {
      if (u.intersects(a)) cover.push_back(u);
    }
    PointSet covered;
    int picked = 0;
    for (int x : a) {
      if (covered.contains(x)) continue;
      auto it = std::find_if(cover.begin(), cover.end(),
                             [x](PointSet u) { return u.contains(x); });
      if (it == cover.end()) return false;
      covered |= *it;
      ++picked;
    }
    return a.subset_of(covered) && picked <= a.size();
  }
  // A filtered family of closed sets on a finite carrier contains its own
  // intersection C, and the family of all closed supersets of C is the
  // largest one with that intersection. For each C missing A, look for a
  // member of that family missing A.
  const std::vector<PointSet> closed = space.closed_sets();
  for (PointSet c : closed) {
    if (c.intersects(a)) continue;
    // Supersets of C are numerically no smaller than C.
    const bool found = std::any_of(std::lower_bound(closed.begin(), closed.end(), c),
                                   closed.end(), [&](PointSet d) {
                                     return c.subset_of(d) && !d.intersects(a);
                                   });
    if (!found) return false;
  }
  return true;
}

PointSet ultrafilter_limits(const FinSpace& space, PrincipalUltrafilter u) {
  const int n = space.size();
  const int x = u.base_point;
  if (x < 0 || x >= n) throw InputError("ultrafilter base point out of range");
  if (n > kMaxCheckedPoints) {
    throw CapacityError("ultrafilter limits are checked on at most 16 points");
  }
  // (a) z is a limit iff every open neighbourhood of z is a member, i.e.
  // contains x.
  PointSet by_definition;
  const std::vector<PointSet> opens = space.opens();
  for (int z = 0; z < n; ++z) {
    const bool limit = std::all_of(opens.begin(), opens.end(), [&](PointSet w) {
      return !w.contains(z) || w.contains(x);
    });
    if (limit) by_definition = by_definition.with(z);
  }
  // (b) intersection of the closures of all members.
  PointSet by_closures = space.points();
  const PointSet others = space.points().without(x);
  PointSet::Word sub = others.bits();
  while (true) {
    by_closures &= space.closure(PointSet(sub).with(x));
    if (sub == 0) break;
    sub = (sub - 1) & others.bits();
  }
  if (by_definition != by_closures) {
    throw InvariantViolation("ultrafilter limit computations disagree at base point " +
                             std::to_string(x));
  }
  if (by_definition != space.point_closure(x)) {
    throw InvariantViolation("principal ultrafilter limit differs from the point closure");
  }
  return by_definition;
}

}  // namespace topolens
