#include "topolens/frames.hpp"

#include <algorithm>
#include <string>

#include "topolens/errors.hpp"
#include "topolens/properties.hpp"

namespace topolens {

namespace {

bool members_less(const ElementSet& a, const ElementSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return elements_of(a) < elements_of(b);
}

std::string set_text(PointSet s) {
  std::string out = "{";
  for (int x : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(x);
  }
  return out + "}";
}

}  // namespace

int OpenLattice::index_of(PointSet u) const {
  auto it = std::lower_bound(opens.begin(), opens.end(), u);
  if (it == opens.end() || *it != u) return -1;
  return static_cast<int>(it - opens.begin());
}

OpenLattice lattice_of_opens(const FinSpace& space) {
  OpenLattice out;
  out.opens = space.opens(kMaxLatticeElements);
  const int m = static_cast<int>(out.opens.size());
  std::vector<ElementSet> up(m, ElementSet(m));
  std::vector<int> meet(static_cast<std::size_t>(m) * m);
  std::vector<int> join(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (out.opens[a].subset_of(out.opens[b])) up[a].set(b);
      meet[static_cast<std::size_t>(a) * m + b] = out.index_of(out.opens[a] & out.opens[b]);
      join[static_cast<std::size_t>(a) * m + b] = out.index_of(out.opens[a] | out.opens[b]);
    }
  }
  out.lattice = FinLattice::from_tables(std::move(up), std::move(meet), std::move(join));
  return out;
}

std::vector<int> preimage_map(const std::vector<int>& f, const FinSpace& x, const FinSpace& y) {
  if (static_cast<int>(f.size()) != x.size()) throw InputError("map has the wrong domain size");
  for (int v : f) {
    if (v < 0 || v >= y.size()) throw InputError("map value out of range");
  }
  const OpenLattice ox = lattice_of_opens(x);
  std::vector<int> out;
  for (PointSet v : y.opens()) {
    PointSet pre;
    for (int p = 0; p < x.size(); ++p) {
      if (v.contains(f[p])) pre = pre.with(p);
    }
    const int idx = ox.index_of(pre);
    if (idx < 0) {
      throw InputError("map is not continuous: preimage of " + set_text(v) + " is " +
                       set_text(pre));
    }
    out.push_back(idx);
  }
  return out;
}

FrameReport frame_report(const FinLattice& l) {
  FrameReport r;
  const int m = l.size();
  r.is_frame = true;
  for (int u = 0; u < m && r.is_frame; ++u) {
    for (int v = 0; v < m && r.is_frame; ++v) {
      for (int w = 0; w < m; ++w) {
        if (l.meet(u, l.join(v, w)) != l.join(l.meet(u, v), l.meet(u, w))) {
          r.is_frame = false;
          r.distributivity_witness = std::array<int, 3>{u, v, w};
          break;
        }
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    bool complemented = false;
    for (int b = 0; b < m && !complemented; ++b) {
      complemented = l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
    }
    if (!complemented) {
      r.uncomplemented = a;
      break;
    }
  }
  r.is_boolean = r.is_frame && !r.uncomplemented;
  return r;
}

bool is_filter(const FinLattice& l, const ElementSet& s) {
  if (s.none()) return false;
  for (auto a = s.find_first(); a != ElementSet::npos; a = s.find_next(a)) {
    if (!l.up(static_cast<int>(a)).is_subset_of(s)) return false;
    for (auto b = s.find_next(a); b != ElementSet::npos; b = s.find_next(b)) {
      if (!s.test(l.meet(static_cast<int>(a), static_cast<int>(b)))) return false;
    }
  }
  return true;
}

bool is_scott_open(const FinLattice& l, const ElementSet& s) {
  for (auto a = s.find_first(); a != ElementSet::npos; a = s.find_next(a)) {
    if (!l.up(static_cast<int>(a)).is_subset_of(s)) return false;
  }
  // Directed families whose join j lies in s: j is their greatest member.
  for (int j = 0; j < l.size(); ++j) {
    if (!s.test(j)) continue;
    ElementSet family = l.no_elements();
    family.set(j);
    if (l.join_of(family) != j || !family.intersects(s)) return false;
  }
  return true;
}

bool is_completely_prime(const FinLattice& l, const ElementSet& f) {
  if (!is_filter(l, f)) return false;
  ElementSet outside = f;
  outside.flip();
  return !f.test(l.join_of(outside));
}

Filter make_filter(const FinLattice& l, const ElementSet& members) {
  Filter f;
  f.members = members;
  f.proper = !members.all();
  f.scott_open = is_scott_open(l, members);
  f.completely_prime = is_completely_prime(l, members);
  return f;
}

std::vector<Filter> filters_of(const FinLattice& l, FilterKind kind) {
  std::vector<Filter> all;
  for (int a = 0; a < l.size(); ++a) {
    const ElementSet& cand = l.up(a);
    if (!is_filter(l, cand)) {
      throw InvariantViolation("principal up-set of " + std::to_string(a) + " is not a filter");
    }
    all.push_back(make_filter(l, cand));
  }
  std::sort(all.begin(), all.end(),
            [](const Filter& x, const Filter& y) { return members_less(x.members, y.members); });
  for (const Filter& f : all) {
    if (!f.scott_open) throw InvariantViolation("a filter on a finite lattice is not Scott-open");
  }
  if (kind == FilterKind::kAll || kind == FilterKind::kScottOpen) return all;
  std::vector<Filter> out;
  for (const Filter& f : all) {
    if (f.completely_prime) out.push_back(f);
  }
  return out;
}

FilterJoin filter_join(const FinLattice& l, const ElementSet& f, const ElementSet& g) {
  if (f.size() != static_cast<std::size_t>(l.size()) ||
      g.size() != static_cast<std::size_t>(l.size())) {
    throw InputError("filter has the wrong width");
  }
  if (!is_filter(l, f) || !is_filter(l, g)) throw InputError("filter_join needs two filters");
  FilterJoin out;
  out.members = l.no_elements();
  for (auto u = f.find_first(); u != ElementSet::npos; u = f.find_next(u)) {
    for (auto v = g.find_first(); v != ElementSet::npos; v = g.find_next(v)) {
      out.members.set(l.meet(static_cast<int>(u), static_cast<int>(v)));
    }
  }
  out.is_filter = is_filter(l, out.members);
  const ElementSet both = f | g;
  out.is_least_upper_bound = out.is_filter && both.is_subset_of(out.members);
  if (out.is_least_upper_bound) {
    for (const Filter& h : filters_of(l, FilterKind::kAll)) {
      if (both.is_subset_of(h.members) && !out.members.is_subset_of(h.members)) {
        out.is_least_upper_bound = false;
        break;
      }
    }
  }
  return out;
}

TemperanceReport temperance_report(const FinLattice& l) {
  TemperanceReport r;
  r.is_frame = frame_report(l).is_frame;
  if (!r.is_frame) r.note = "not a frame: the literal set join is tested";
  const std::vector<Filter> scott = filters_of(l, FilterKind::kScottOpen);
  r.locally_temperate = true;
  ElementSet joined = l.no_elements();
  for (std::size_t i = 0; i < scott.size() && r.locally_temperate; ++i) {
    for (std::size_t j = i; j < scott.size(); ++j) {
      const ElementSet& f = scott[i].members;
      const ElementSet& g = scott[j].members;
      joined.reset();
      for (auto u = f.find_first(); u != ElementSet::npos; u = f.find_next(u)) {
        for (auto v = g.find_first(); v != ElementSet::npos; v = g.find_next(v)) {
          joined.set(l.meet(static_cast<int>(u), static_cast<int>(v)));
        }
      }
      // A non-empty set is a filter of a finite lattice iff it is the
      // up-set of its own meet.
      const bool filter = joined.any() && joined == l.up(l.meet_of(joined));
      if (!filter || !is_scott_open(l, joined)) {
        r.locally_temperate = false;
        r.witness = std::pair<int, int>(static_cast<int>(i), static_cast<int>(j));
        break;
      }
    }
  }
  ElementSet top_only = l.no_elements();
  top_only.set(l.top());
  r.temperate = r.locally_temperate && is_filter(l, top_only) && is_scott_open(l, top_only);
  return r;
}

PointsSpace points_space(const FinLattice& l) {
  PointsSpace out;
  for (const Filter& f : filters_of(l, FilterKind::kCompletelyPrime)) {
    out.points.push_back(f.members);
  }
  const int k = static_cast<int>(out.points.size());
  if (k > kMaxCarrier) throw CapacityError("more than 64 completely prime filters");
  out.open_of.resize(l.size());
  for (int u = 0; u < l.size(); ++u) {
    PointSet o;
    for (int x = 0; x < k; ++x) {
      if (out.points[x].test(u)) o = o.with(x);
    }
    out.open_of[u] = o;
  }
  out.space = FinSpace::from_opens(k, out.open_of);
  if (!is_sober(out.space)) throw InvariantViolation("pt(L) is not sober");
  return out;
}

DualityReport stone_round_trip(const FinSpace& space) {
  DualityReport r;
  const OpenLattice ol = lattice_of_opens(space);
  const FinLattice& l = ol.lattice;
  const PointsSpace pt = points_space(l);
  const int n = space.size();
  const int m = l.size();

  std::vector<int> unit(n, -1);
  r.unit_lands_in_points = true;
  for (int x = 0; x < n; ++x) {
    ElementSet nbhds = l.no_elements();
    for (int i = 0; i < m; ++i) {
      if (ol.opens[i].contains(x)) nbhds.set(i);
    }
    if (!is_completely_prime(l, nbhds)) {
      r.unit_lands_in_points = false;
      r.witnesses.push_back("neighbourhood filter of point " + std::to_string(x) +
                            " is not completely prime");
      continue;
    }
    auto it = std::find(pt.points.begin(), pt.points.end(), nbhds);
    unit[x] = static_cast<int>(it - pt.points.begin());
  }

  PointSet image;
  r.unit_injective = true;
  for (int x = 0; x < n; ++x) {
    if (unit[x] < 0) continue;
    if (image.contains(unit[x])) {
      r.unit_injective = false;
      for (int y = 0; y < x; ++y) {
        if (unit[y] == unit[x]) {
          r.witnesses.push_back("points " + std::to_string(y) + " and " + std::to_string(x) +
                                " have the same neighbourhood filter");
          break;
        }
      }
    }
    image = image.with(unit[x]);
  }
  r.unit_surjective = image == pt.space.points();
  if (!r.unit_surjective) {
    r.witnesses.push_back("completely prime filters outside the unit's image: " +
                          set_text(pt.space.points().minus(image)));
  }

  auto preimage = [&](PointSet o) {
    PointSet out;
    for (int x = 0; x < n; ++x) {
      if (unit[x] >= 0 && o.contains(unit[x])) out = out.with(x);
    }
    return out;
  };
  r.unit_continuous = true;
  for (PointSet o : pt.space.opens()) {
    if (!space.is_open(preimage(o))) {
      r.unit_continuous = false;
      r.witnesses.push_back("unit preimage of " + set_text(o) + " is not open");
      break;
    }
  }
  r.unit_open_map = true;
  for (PointSet u : ol.opens) {
    PointSet img;
    for (int x : u) {
      if (unit[x] >= 0) img = img.with(unit[x]);
    }
    if (!pt.space.is_open(img)) {
      r.unit_open_map = false;
      r.witnesses.push_back("unit image of open " + set_text(u) + " is not open");
      break;
    }
  }
  r.unit_homeomorphism = r.unit_lands_in_points && r.unit_injective && r.unit_surjective &&
                         r.unit_continuous && r.unit_open_map;

  // Counit: u -> O_u must be an order isomorphism onto O(pt L).
  const std::vector<PointSet> pt_opens = pt.space.opens();
  r.spatial = true;
  for (int u = 0; u < m && r.spatial; ++u) {
    for (int v = 0; v < m; ++v) {
      if (l.leq(u, v) != pt.open_of[u].subset_of(pt.open_of[v])) {
        r.spatial = false;
        r.witnesses.push_back("counit does not reflect the order at (" + std::to_string(u) +
                              ", " + std::to_string(v) + ")");
        break;
      }
    }
  }
  std::vector<PointSet> counit_image(pt.open_of);
  std::sort(counit_image.begin(), counit_image.end());
  counit_image.erase(std::unique(counit_image.begin(), counit_image.end()), counit_image.end());
  if (counit_image != pt_opens) {
    r.spatial = false;
    r.witnesses.push_back("counit is not onto the opens of pt(L)");
  }
  return r;
}

DualityReport hofmann_mislove_report(const FinSpace& space, bool include_improper) {
  DualityReport r;
  if (!is_sober(space)) r.warnings.push_back("space is not sober");
  const OpenLattice ol = lattice_of_opens(space);
  const FinLattice& l = ol.lattice;
  const int m = l.size();

  std::vector<ElementSet> filters;
  for (const Filter& f : filters_of(l, FilterKind::kScottOpen)) {
    if (include_improper || f.proper) filters.push_back(f.members);
  }
  std::vector<PointSet> compacts;
  for (PointSet q : compact_saturated_sets(space)) {
    if (include_improper || !q.empty()) compacts.push_back(q);
  }
  r.scott_open_filter_count = static_cast<int>(filters.size());
  r.compact_saturated_count = static_cast<int>(compacts.size());

  auto meet_of_filter = [&](const ElementSet& f) {
    PointSet q = space.points();
    for (auto i = f.find_first(); i != ElementSet::npos; i = f.find_next(i)) q &= ol.opens[i];
    return q;
  };
  auto neighbourhoods = [&](PointSet q) {
    ElementSet f(m);
    for (int i = 0; i < m; ++i) {
      if (q.subset_of(ol.opens[i])) f.set(i);
    }
    return f;
  };

  std::vector<PointSet> image(filters.size());
  r.hm_bijection = filters.size() == compacts.size();
  for (std::size_t i = 0; i < filters.size(); ++i) {
    image[i] = meet_of_filter(filters[i]);
    if (!std::binary_search(compacts.begin(), compacts.end(), image[i])) {
      r.hm_bijection = false;
      r.witnesses.push_back("intersection of filter " + std::to_string(i) +
                            " is not a listed compact saturated set");
    } else if (neighbourhoods(image[i]) != filters[i]) {
      r.hm_bijection = false;
      r.witnesses.push_back("filter " + std::to_string(i) +
                            " is not the neighbourhood filter of its intersection");
    }
  }
  for (PointSet q : compacts) {
    const ElementSet f = neighbourhoods(q);
    if (std::find(filters.begin(), filters.end(), f) == filters.end()) {
      r.hm_bijection = false;
      r.witnesses.push_back("neighbourhood filter of " + set_text(q) +
                            " is not a listed Scott-open filter");
    } else if (meet_of_filter(f) != q) {
      r.hm_bijection = false;
      r.witnesses.push_back(set_text(q) + " is not the intersection of its neighbourhoods");
    }
  }
  r.hm_order_reversing = true;
  for (std::size_t i = 0; i < filters.size() && r.hm_order_reversing; ++i) {
    for (std::size_t j = 0; j < filters.size(); ++j) {
      if (filters[i].is_subset_of(filters[j]) != image[j].subset_of(image[i])) {
        r.hm_order_reversing = false;
        r.witnesses.push_back("filters " + std::to_string(i) + " and " + std::to_string(j) +
                              " break order reversal");
        break;
      }
    }
  }
  return r;
}

std::vector<ElementSet> waybelow_relation(const FinLattice& l) {
  const int m = l.size();
  std::vector<ElementSet> wb(m, ElementSet(m));
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      // A directed family with join s >= v has s as its greatest member,
      // so it reaches above u iff s does.
      bool ok = true;
      const ElementSet& above = l.up(v);
      for (auto s = above.find_first(); s != ElementSet::npos && ok; s = above.find_next(s)) {
        ok = l.leq(u, static_cast<int>(s));
      }
      if (ok) wb[u].set(v);
    }
  }
  return wb;
}

bool is_continuous(const FinLattice& l, const std::vector<ElementSet>& waybelow) {
  const int m = l.size();
  for (int v = 0; v < m; ++v) {
    ElementSet below(m);
    for (int u = 0; u < m; ++u) {
      if (waybelow[u].test(v)) below.set(u);
    }
    if (below.none()) return false;
    for (auto a = below.find_first(); a != ElementSet::npos; a = below.find_next(a)) {
      for (auto b = below.find_next(a); b != ElementSet::npos; b = below.find_next(b)) {
        if (!(l.up(static_cast<int>(a)) & l.up(static_cast<int>(b))).intersects(below)) {
          return false;
        }
      }
    }
    if (l.join_of(below) != v) return false;
  }
  return true;
}

WayBelowReport waybelow_and_stability(const FinLattice& l) {
  WayBelowReport r;
  const int m = l.size();
  r.waybelow = waybelow_relation(l);
  r.waybelow_equals_leq = true;
  for (int u = 0; u < m; ++u) {
    if (r.waybelow[u] != l.up(u)) r.waybelow_equals_leq = false;
  }
  r.continuous = is_continuous(l, r.waybelow);
  r.stable = true;
  for (int u = 0; u < m && r.stable; ++u) {
    const ElementSet& row = r.waybelow[u];
    for (auto v = row.find_first(); v != ElementSet::npos && r.stable; v = row.find_next(v)) {
      for (auto w = row.find_next(v); w != ElementSet::npos; w = row.find_next(w)) {
        if (!row.test(l.meet(static_cast<int>(v), static_cast<int>(w)))) {
          r.stable = false;
          r.stability_witness =
              std::array<int, 3>{u, static_cast<int>(v), static_cast<int>(w)};
          break;
        }
      }
    }
  }
  r.locally_temperate = temperance_report(l).locally_temperate;
  const bool frame = frame_report(l).is_frame;
  r.stable_iff_locally_temperate = !(frame && r.continuous) || r.stable == r.locally_temperate;
  return r;
}

}  // namespace topolens
