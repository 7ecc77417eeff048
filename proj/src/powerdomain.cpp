#include "topolens/powerdomain.hpp"

#include <algorithm>
#include <set>

#include "topolens/dot.hpp"
#include "topolens/errors.hpp"

namespace topolens {

namespace {

// Intersection of the closed supersets of a.
PointSet closure_from(const std::vector<PointSet>& closed, PointSet all, PointSet a) {
  PointSet out = all;
  for (PointSet c : closed) {
    if (a.subset_of(c)) out &= c;
  }
  return out;
}

bool conditions_hold(const FinSpace& space, const std::vector<PointSet>& opens,
                     const QuasiLens& ql) {
  const PointSet meet = ql.q & ql.c;
  if (meet.empty()) return false;
  if (!ql.q.subset_of(space.upset(meet))) return false;
  for (PointSet u : opens) {
    if (ql.q.subset_of(u) && !ql.c.subset_of(space.closure(u & ql.c))) return false;
  }
  return true;
}

int index_of(const std::vector<QuasiLens>& sorted, const QuasiLens& ql) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), ql);
  if (it == sorted.end() || *it != ql) return -1;
  return static_cast<int>(it - sorted.begin());
}

void check_carrier_size(std::size_t k) {
  if (k > static_cast<std::size_t>(kMaxCarrier)) {
    throw CapacityError("hyperspace carrier exceeds " + std::to_string(kMaxCarrier) + " points");
  }
}

}  // namespace

std::vector<Lens> lenses_by_intersection(const FinSpace& space) {
  if (space.size() > kMaxCheckedPoints) throw CapacityError("lens enumeration capped at 16 points");
  std::set<PointSet> found;
  const std::vector<PointSet> opens = space.opens();
  const std::vector<PointSet> closed = space.closed_sets();
  for (PointSet q : opens) {
    for (PointSet c : closed) {
      if (!(q & c).empty()) found.insert(q & c);
    }
  }
  std::vector<Lens> out;
  for (PointSet l : found) out.push_back(Lens{l});
  return out;
}

std::vector<Lens> lenses_by_fixed_point(const FinSpace& space) {
  if (space.size() > kMaxCheckedPoints) throw CapacityError("lens enumeration capped at 16 points");
  std::vector<Lens> out;
  const PointSet::Word total = space.points().bits();
  for (PointSet::Word bits = 1; bits != 0 && bits <= total; ++bits) {
    const PointSet l(bits);
    if ((space.upset(l) & space.closure(l)) == l) out.push_back(Lens{l});
  }
  return out;
}

std::vector<Lens> lenses(const FinSpace& space) {
  std::vector<Lens> a = lenses_by_intersection(space);
  if (a != lenses_by_fixed_point(space)) {
    throw InvariantViolation("lens enumerations disagree");
  }
  return a;
}

bool is_lens(const FinSpace& space, PointSet l) {
  return !l.empty() && l.subset_of(space.points()) &&
         (space.upset(l) & space.closure(l)) == l;
}

bool is_quasi_lens(const FinSpace& space, const QuasiLens& ql) {
  if (!ql.q.subset_of(space.points()) || !ql.c.subset_of(space.points())) return false;
  if (!space.is_open(ql.q) || !space.is_closed(ql.c)) return false;
  return conditions_hold(space, space.opens(), ql);
}

std::vector<QuasiLens> quasi_lenses(const FinSpace& space) {
  if (space.size() > kMaxCheckedPoints) throw CapacityError("quasi-lens enumeration capped at 16 points");
  const std::vector<PointSet> opens = space.opens();
  const std::vector<PointSet> closed = space.closed_sets();
  std::vector<QuasiLens> out;
  for (PointSet q : opens) {
    for (PointSet c : closed) {
      if (conditions_hold(space, opens, QuasiLens{q, c})) out.push_back(QuasiLens{q, c});
    }
  }
  return out;
}

QuasiLens iota(const FinSpace& space, const Lens& l) {
  if (!is_lens(space, l.members)) throw InputError("iota: not a lens: " + format_set(l.members));
  return QuasiLens{space.upset(l.members), space.closure(l.members)};
}

Lens rho(const FinSpace& space, const QuasiLens& ql) {
  if (!is_quasi_lens(space, ql)) throw InputError("rho: not a quasi-lens: " + format_quasi_lens(ql));
  return Lens{ql.q & ql.c};
}

Hyperspace hyperspace(const FinSpace& space, HyperspaceKind kind) {
  Hyperspace h;
  h.kind = kind;
  h.base_opens = space.opens();
  std::size_t k = 0;
  if (kind == HyperspaceKind::kLensVietoris) {
    h.lenses = lenses(space);
    k = h.lenses.size();
  } else {
    h.quasi = quasi_lenses(space);
    k = h.quasi.size();
  }
  check_carrier_size(k);
  std::vector<PointSet> subbasis;
  for (PointSet u : h.base_opens) {
    PointSet box;
    PointSet diamond;
    for (std::size_t i = 0; i < k; ++i) {
      const int p = static_cast<int>(i);
      if (kind == HyperspaceKind::kLensVietoris) {
        if (h.lenses[i].members.subset_of(u)) box = box.with(p);
        if (h.lenses[i].members.intersects(u)) diamond = diamond.with(p);
      } else {
        if (h.quasi[i].q.subset_of(u)) box = box.with(p);
        if (h.quasi[i].c.intersects(u)) diamond = diamond.with(p);
      }
    }
    h.box.push_back(box);
    h.diamond.push_back(diamond);
    subbasis.push_back(box);
    subbasis.push_back(diamond);
  }
  h.space = build_space(static_cast<int>(k), subbasis);
  return h;
}

bool tem_leq(const FinSpace& space, const Lens& a, const Lens& b) {
  const std::vector<PointSet> closed = space.closed_sets();
  return space.upset(b.members).subset_of(space.upset(a.members)) &&
         closure_from(closed, space.points(), a.members)
             .subset_of(closure_from(closed, space.points(), b.members));
}

bool em_leq(const FinSpace& space, const Lens& a, const Lens& b) {
  return space.upset(b.members).subset_of(space.upset(a.members)) &&
         space.downset(a.members).subset_of(space.downset(b.members));
}

bool HyperspaceReport::all_hold() const {
  return iota_injective && iota_surjective && iota_homeomorphism && rho_iota_identity &&
         iota_rho_identity && box_preimages_match && diamond_preimages_match && tem_equals_em &&
         tem_equals_vietoris_specialization && all_downsets_closed;
}

namespace {

HyperspaceReport full_report(const FinSpace& space) {
  HyperspaceReport r;
  const Hyperspace hl = hyperspace(space, HyperspaceKind::kLensVietoris);
  const Hyperspace hq = hyperspace(space, HyperspaceKind::kQuasiVietoris);
  const std::vector<Lens>& ls = hl.lenses;
  const std::vector<QuasiLens>& qs = hq.quasi;
  const int k = static_cast<int>(ls.size());
  r.lens_count = k;
  r.quasi_lens_count = static_cast<int>(qs.size());
  auto note = [&r](const std::string& s) {
    if (r.witnesses.size() < 32) r.witnesses.push_back(s);
  };

  std::vector<int> image(k, -1);
  r.iota_injective = true;
  r.rho_iota_identity = true;
  std::vector<bool> hit(qs.size(), false);
  for (int i = 0; i < k; ++i) {
    const QuasiLens ql = iota(space, ls[i]);
    image[i] = index_of(qs, ql);
    if (image[i] < 0) {
      r.iota_injective = false;
      note("iota image is not a quasi-lens: " + format_set(ls[i].members));
      continue;
    }
    if (hit[image[i]]) {
      r.iota_injective = false;
      note("iota collides at " + format_quasi_lens(ql));
    }
    hit[image[i]] = true;
    if ((ql.q & ql.c) != ls[i].members) {
      r.rho_iota_identity = false;
      note("rho(iota(L)) != L for L=" + format_set(ls[i].members));
    }
  }
  r.iota_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  if (!r.iota_surjective) note("iota misses some quasi-lens");

  r.iota_rho_identity = true;
  for (const QuasiLens& ql : qs) {
    const PointSet l = ql.q & ql.c;
    if (!is_lens(space, l) || iota(space, Lens{l}) != ql) {
      r.iota_rho_identity = false;
      note("iota(rho(q,c)) != (q,c) at " + format_quasi_lens(ql));
    }
  }

  auto preimage = [&](PointSet target) {
    PointSet out;
    for (int i = 0; i < k; ++i) {
      if (image[i] >= 0 && target.contains(image[i])) out = out.with(i);
    }
    return out;
  };
  r.box_preimages_match = true;
  r.diamond_preimages_match = true;
  for (std::size_t u = 0; u < hl.base_opens.size(); ++u) {
    if (preimage(hq.box[u]) != hl.box[u]) {
      r.box_preimages_match = false;
      note("box preimage differs for U=" + format_set(hl.base_opens[u]));
    }
    if (preimage(hq.diamond[u]) != hl.diamond[u]) {
      r.diamond_preimages_match = false;
      note("diamond preimage differs for U=" + format_set(hl.base_opens[u]));
    }
  }

  // On finite carriers a bijection is a homeomorphism iff it is an
  // isomorphism of specialization preorders.
  bool order_iso = r.iota_injective && r.iota_surjective;
  for (int i = 0; i < k && order_iso; ++i) {
    for (int j = 0; j < k; ++j) {
      const bool lens_side = hl.space.min_neighbourhood(i).contains(j);
      const bool quasi_side = hq.space.min_neighbourhood(image[i]).contains(image[j]);
      if (lens_side != quasi_side) {
        order_iso = false;
        note("iota breaks specialization between " + format_set(ls[i].members) + " and " +
             format_set(ls[j].members));
        break;
      }
    }
  }
  r.iota_homeomorphism = order_iso && r.box_preimages_match && r.diamond_preimages_match;

  const std::vector<PointSet> closed = space.closed_sets();
  std::vector<PointSet> up(k);
  std::vector<PointSet> cl(k);
  std::vector<PointSet> down(k);
  r.all_downsets_closed = true;
  for (int i = 0; i < k; ++i) {
    up[i] = space.upset(ls[i].members);
    cl[i] = closure_from(closed, space.points(), ls[i].members);
    down[i] = space.downset(ls[i].members);
    if (!std::binary_search(closed.begin(), closed.end(), down[i])) {
      r.all_downsets_closed = false;
      note("down L not closed for L=" + format_set(ls[i].members));
    }
  }
  r.tem_equals_em = true;
  r.tem_equals_vietoris_specialization = true;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const bool above = up[j].subset_of(up[i]);
      const bool tem = above && cl[i].subset_of(cl[j]);
      const bool em = above && down[i].subset_of(down[j]);
      const bool vietoris = hl.space.min_neighbourhood(i).contains(j);
      const std::string pair = format_set(ls[i].members) + " " + format_set(ls[j].members);
      if (tem != em) {
        r.tem_equals_em = false;
        note("TEM and EM differ on " + pair);
      }
      if (tem != vietoris) {
        r.tem_equals_vietoris_specialization = false;
        note("TEM and Vietoris specialization differ on " + pair);
      }
    }
  }
  return r;
}

}  // namespace

HyperspaceReport order_report(const FinSpace& space) { return full_report(space); }
HyperspaceReport check_embedding(const FinSpace& space) { return full_report(space); }

LemmaCheck lemma_hypothesis_check(const FinSpace& space) {
  LemmaCheck out;
  const std::vector<PointSet> opens = space.opens();
  const std::vector<PointSet> closed = space.closed_sets();
  for (PointSet q : opens) {
    for (PointSet c : closed) {
      bool hypothesis = true;
      for (PointSet u : opens) {
        if (q.subset_of(u) && !c.subset_of(space.closure(u & c))) {
          hypothesis = false;
          break;
        }
      }
      if (hypothesis && !c.subset_of(space.closure(q & c))) {
        out.holds = false;
        out.witness = QuasiLens{q, c};
        return out;
      }
    }
  }
  return out;
}

std::string format_set(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string format_quasi_lens(const QuasiLens& ql) {
  return "(" + format_set(ql.q) + "," + format_set(ql.c) + ")";
}

std::string lens_order_dot(const FinSpace& space) {
  const std::vector<Lens> ls = lenses(space);
  const std::vector<PointSet> closed = space.closed_sets();
  std::vector<std::string> labels;
  std::vector<PointSet> up;
  std::vector<PointSet> cl;
  for (const Lens& l : ls) {
    labels.push_back(format_set(l.members));
    up.push_back(space.upset(l.members));
    cl.push_back(closure_from(closed, space.points(), l.members));
  }
  return hasse_dot("lenses", labels, [&](int a, int b) {
    return up[b].subset_of(up[a]) && cl[a].subset_of(cl[b]);
  });
}

std::string quasi_lens_dot(const FinSpace& space) {
  const Hyperspace h = hyperspace(space, HyperspaceKind::kQuasiVietoris);
  std::vector<std::string> labels;
  for (const QuasiLens& ql : h.quasi) labels.push_back(format_quasi_lens(ql));
  return hasse_dot("quasi_lenses", labels, [&](int a, int b) {
    return h.space.min_neighbourhood(a).contains(b);
  });
}

}  // namespace topolens
