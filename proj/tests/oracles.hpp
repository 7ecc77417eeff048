#pragma once

// Brute-force reference computations for the tests. Everything works from
// the bare definitions over explicit families of bitmasks and calls nothing
// in the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline Mask full(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline Mask bit(int x) { return Mask{1} << x; }
inline bool has(Mask s, int x) { return (s >> x) & 1U; }
inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

// ---------------------------------------------------------------------------
// Topologies

struct Topology {
  int n = 0;
  std::vector<Mask> opens;  // sorted
};

/// Saturates a family under binary union and intersection until nothing new
/// appears.
inline Topology generate(int n, const std::vector<Mask>& family) {
  std::set<Mask> s(family.begin(), family.end());
  s.insert(0);
  s.insert(full(n));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Mask> v(s.begin(), s.end());
    for (Mask a : v) {
      for (Mask b : v) {
        grew |= s.insert(a | b).second;
        grew |= s.insert(a & b).second;
      }
    }
  }
  return {n, {s.begin(), s.end()}};
}

/// Every family of subsets of an n-set (n <= 4) that contains the empty and
/// full sets and is closed under binary union and intersection.
inline std::vector<Topology> all_topologies(int n) {
  const int subsets = 1 << n;
  const Mask top = full(n);
  std::vector<Topology> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!has(fam, 0) || !has(fam, static_cast<int>(top))) continue;
    std::vector<Mask> opens;
    for (int s = 0; s < subsets; ++s) {
      if (has(fam, s)) opens.push_back(static_cast<Mask>(s));
    }
    bool closed = true;
    for (Mask a : opens) {
      for (Mask b : opens) {
        if (!has(fam, static_cast<int>(a | b)) || !has(fam, static_cast<int>(a & b))) closed = false;
      }
    }
    if (closed) out.push_back({n, opens});
  }
  return out;
}

inline bool is_open(const Topology& t, Mask a) {
  return std::binary_search(t.opens.begin(), t.opens.end(), a);
}

inline bool spec_leq(const Topology& t, int x, int y) {
  for (Mask u : t.opens) {
    if (has(u, x) && !has(u, y)) return false;
  }
  return true;
}

inline Mask saturation(const Topology& t, Mask a) {
  Mask r = full(t.n);
  for (Mask u : t.opens) {
    if (sub(a, u)) r &= u;
  }
  return r;
}

inline Mask closure(const Topology& t, Mask a) {
  Mask r = full(t.n);
  for (Mask u : t.opens) {
    const Mask c = full(t.n) & ~u;
    if (sub(a, c)) r &= c;
  }
  return r;
}

inline Mask up(const Topology& t, int x) {
  Mask r = 0;
  for (int y = 0; y < t.n; ++y) {
    if (spec_leq(t, x, y)) r |= bit(y);
  }
  return r;
}

inline Mask down(const Topology& t, Mask a) {
  Mask r = 0;
  for (int y = 0; y < t.n; ++y) {
    for (int x = 0; x < t.n; ++x) {
      if (has(a, x) && spec_leq(t, y, x)) r |= bit(y);
    }
  }
  return r;
}

inline bool t0(const Topology& t) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = x + 1; y < t.n; ++y) {
      if (spec_leq(t, x, y) && spec_leq(t, y, x)) return false;
    }
  }
  return true;
}

/// For all x, y and open W around up(x) /\ up(y): some open U containing x
/// and V containing y have U /\ V inside W.
inline bool weakly_hausdorff(const Topology& t) {
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      const Mask m = up(t, x) & up(t, y);
      for (Mask w : t.opens) {
        if (!sub(m, w)) continue;
        bool found = false;
        for (Mask u : t.opens) {
          for (Mask v : t.opens) {
            if (has(u, x) && has(v, y) && sub(u & v, w)) found = true;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

/// Non-empty closed sets that are not the union of two proper closed
/// subsets, each required to have exactly one generic point.
inline bool sober(const Topology& t) {
  std::vector<Mask> closed;
  for (Mask u : t.opens) closed.push_back(full(t.n) & ~u);
  for (Mask c : closed) {
    if (c == 0) continue;
    bool reducible = false;
    for (Mask a : closed) {
      for (Mask b : closed) {
        if (a != c && b != c && sub(a, c) && sub(b, c) && (a | b) == c) reducible = true;
      }
    }
    if (reducible) continue;
    int generic = 0;
    for (int x = 0; x < t.n; ++x) {
      if (closure(t, bit(x)) == c) ++generic;
    }
    if (generic != 1) return false;
  }
  return true;
}

/// T0, every directed subset has a least upper bound, and every open around
/// that bound meets the subset.
inline bool monotone_convergence(const Topology& t) {
  if (!t0(t)) return false;
  for (Mask d = 1; d <= full(t.n); ++d) {
    bool directed = true;
    for (int a = 0; a < t.n; ++a) {
      for (int b = 0; b < t.n; ++b) {
        if (!has(d, a) || !has(d, b)) continue;
        bool bound = false;
        for (int c = 0; c < t.n; ++c) {
          if (has(d, c) && spec_leq(t, a, c) && spec_leq(t, b, c)) bound = true;
        }
        if (!bound) directed = false;
      }
    }
    if (!directed) continue;
    Mask bounds = 0;
    for (int z = 0; z < t.n; ++z) {
      bool above = true;
      for (int x = 0; x < t.n; ++x) {
        if (has(d, x) && !spec_leq(t, x, z)) above = false;
      }
      if (above) bounds |= bit(z);
    }
    int sup = -1;
    for (int s = 0; s < t.n; ++s) {
      if (!has(bounds, s)) continue;
      bool least = true;
      for (int z = 0; z < t.n; ++z) {
        if (has(bounds, z) && !spec_leq(t, s, z)) least = false;
      }
      if (least) sup = s;
    }
    if (sup < 0) return false;
    for (Mask u : t.opens) {
      if (has(u, sup) && (u & d) == 0) return false;
    }
  }
  return true;
}

/// Limit set of the ultrafilter of supersets of {p}: points every open
/// neighbourhood of which contains p.
inline Mask ultrafilter_limit(const Topology& t, int p) {
  Mask r = 0;
  for (int x = 0; x < t.n; ++x) {
    bool conv = true;
    for (Mask u : t.opens) {
      if (has(u, x) && !has(u, p)) conv = false;
    }
    if (conv) r |= bit(x);
  }
  return r;
}

/// Every limit set is empty or the closure of exactly one point. Finite
/// carriers only have principal ultrafilters.
inline bool locally_strongly_sober(const Topology& t) {
  for (int p = 0; p < t.n; ++p) {
    const Mask lim = ultrafilter_limit(t, p);
    if (lim == 0) continue;
    int generic = 0;
    for (int x = 0; x < t.n; ++x) {
      if (closure(t, bit(x)) == lim) ++generic;
    }
    if (generic != 1) return false;
  }
  return true;
}

/// Every subset of a finite space is compact, so intersections of compact
/// saturated sets are compact.
inline bool coherent(const Topology&) { return true; }

/// Non-empty Q /\ C with Q saturated and C closed.
inline std::vector<Mask> lenses(const Topology& t) {
  std::set<Mask> out;
  for (Mask q = 0; q <= full(t.n); ++q) {
    if (saturation(t, q) != q) continue;
    for (Mask u : t.opens) {
      const Mask l = q & ~u & full(t.n);
      if (l != 0) out.insert(l);
    }
  }
  return {out.begin(), out.end()};
}

/// The three quasi-lens conditions, literally.
inline bool quasi_lens(const Topology& t, Mask q, Mask c) {
  if (saturation(t, q) != q || closure(t, c) != c) return false;
  if ((q & c) == 0) return false;
  if (!sub(q, saturation(t, q & c))) return false;
  for (Mask u : t.opens) {
    if (sub(q, u) && !sub(c, closure(t, u & c))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Finite posets and lattices (at most 64 elements, subset scans need <= 16)

struct Order {
  int m = 0;
  std::vector<Mask> up;
  std::vector<Mask> down;
};

inline bool leq(const Order& o, int a, int b) { return has(o.up[a], b); }

inline Mask upset(const Order& o, Mask s) {
  Mask r = 0;
  for (int a = 0; a < o.m; ++a) {
    if (has(s, a)) r |= o.up[a];
  }
  return r;
}

/// Least upper bound of s; -1 if none.
inline int lub(const Order& o, Mask s) {
  Mask bounds = full(o.m);
  for (int a = 0; a < o.m; ++a) {
    if (has(s, a)) bounds &= o.up[a];
  }
  for (int c = 0; c < o.m; ++c) {
    if (has(bounds, c) && sub(bounds, o.up[c])) return c;
  }
  return -1;
}

inline int glb(const Order& o, Mask s) {
  Mask bounds = full(o.m);
  for (int a = 0; a < o.m; ++a) {
    if (has(s, a)) bounds &= o.down[a];
  }
  for (int c = 0; c < o.m; ++c) {
    if (has(bounds, c) && sub(bounds, o.down[c])) return c;
  }
  return -1;
}

struct Directed {
  Mask members;
  int join;
};

/// Non-empty subsets in which every pair has an upper bound inside.
inline std::vector<Directed> directed_families(const Order& o) {
  std::vector<Directed> out;
  for (Mask d = 1; d <= full(o.m); ++d) {
    bool ok = true;
    for (int a = 0; a < o.m && ok; ++a) {
      for (int b = a + 1; b < o.m && ok; ++b) {
        if (has(d, a) && has(d, b) && (o.up[a] & o.up[b] & d) == 0) ok = false;
      }
    }
    if (ok) out.push_back({d, lub(o, d)});
  }
  return out;
}

/// u << v iff every directed family with join above v has a member above u.
inline bool waybelow(const Order& o, const std::vector<Directed>& dirs, int u, int v) {
  for (const Directed& d : dirs) {
    if (leq(o, v, d.join) && (d.members & o.up[u]) == 0) return false;
  }
  return true;
}

inline bool is_filter(const Order& o, Mask s) {
  if (s == 0 || upset(o, s) != s) return false;
  for (int a = 0; a < o.m; ++a) {
    for (int b = 0; b < o.m; ++b) {
      if (has(s, a) && has(s, b) && !has(s, glb(o, bit(a) | bit(b)))) return false;
    }
  }
  return true;
}

inline bool scott_open(const Order& o, const std::vector<Directed>& dirs, Mask s) {
  if (upset(o, s) != s) return false;
  for (const Directed& d : dirs) {
    if (has(s, d.join) && (d.members & s) == 0) return false;
  }
  return true;
}

/// Any family whose join lies in f meets f.
inline bool completely_prime(const Order& o, Mask f) {
  for (Mask s = 0; s <= full(o.m); ++s) {
    if (has(f, lub(o, s)) && (s & f) == 0) return false;
  }
  return true;
}

inline std::vector<Mask> filters(const Order& o) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(o.m); ++s) {
    if (is_filter(o, s)) out.push_back(s);
  }
  return out;
}

/// {u /\ v | u in f, v in g}.
inline Mask meet_set(const Order& o, Mask f, Mask g) {
  Mask r = 0;
  for (int a = 0; a < o.m; ++a) {
    for (int b = 0; b < o.m; ++b) {
      if (has(f, a) && has(g, b)) r |= bit(glb(o, bit(a) | bit(b)));
    }
  }
  return r;
}

/// Intersection of every filter containing f and g.
inline Mask least_filter_above(const Order& o, const std::vector<Mask>& all, Mask f, Mask g) {
  Mask r = full(o.m);
  for (Mask h : all) {
    if (sub(f | g, h)) r &= h;
  }
  return r;
}

struct FrameFacts {
  bool waybelow_is_leq = true;
  bool stable = true;
  bool locally_temperate = true;
  bool top_scott_open = true;
};

inline FrameFacts frame_facts(const Order& o) {
  FrameFacts out;
  const std::vector<Directed> dirs = directed_families(o);
  std::vector<Mask> wb(o.m, 0);
  for (int u = 0; u < o.m; ++u) {
    for (int v = 0; v < o.m; ++v) {
      if (waybelow(o, dirs, u, v)) wb[u] |= bit(v);
    }
    if (wb[u] != o.up[u]) out.waybelow_is_leq = false;
  }
  for (int u = 0; u < o.m; ++u) {
    for (int v = 0; v < o.m; ++v) {
      for (int w = 0; w < o.m; ++w) {
        if (has(wb[u], v) && has(wb[u], w) && !has(wb[u], glb(o, bit(v) | bit(w)))) out.stable = false;
      }
    }
  }
  std::vector<Mask> so;
  for (Mask f : filters(o)) {
    if (scott_open(o, dirs, f)) so.push_back(f);
  }
  for (Mask f : so) {
    for (Mask g : so) {
      if (!scott_open(o, dirs, meet_set(o, f, g))) out.locally_temperate = false;
    }
  }
  int top = lub(o, full(o.m));
  out.top_scott_open = scott_open(o, dirs, bit(top));
  return out;
}

}  // namespace oracle
