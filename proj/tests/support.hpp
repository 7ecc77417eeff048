#pragma once

// Conversions from library objects to the plain bitmask forms the oracles
// take.

#include <vector>

#include "oracles.hpp"
#include "topolens/lattice.hpp"
#include "topolens/space.hpp"

namespace testing_support {

inline oracle::Topology to_topology(const topolens::FinSpace& s) {
  oracle::Topology t{s.size(), {}};
  for (topolens::PointSet u : s.opens()) t.opens.push_back(u.bits());
  return t;
}

inline topolens::FinSpace to_space(const oracle::Topology& t) {
  std::vector<topolens::PointSet> opens;
  for (oracle::Mask u : t.opens) opens.emplace_back(u);
  return topolens::FinSpace::from_opens(t.n, opens);
}

/// Reads only the order relation; meets and joins are rederived by the
/// oracle.
inline oracle::Order to_order(const topolens::FinLattice& l) {
  oracle::Order o{l.size(), std::vector<oracle::Mask>(l.size(), 0), std::vector<oracle::Mask>(l.size(), 0)};
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      if (l.leq(a, b)) {
        o.up[a] |= oracle::bit(b);
        o.down[b] |= oracle::bit(a);
      }
    }
  }
  return o;
}

inline oracle::Mask to_mask(const topolens::ElementSet& s) {
  oracle::Mask m = 0;
  for (std::size_t i = s.find_first(); i != topolens::ElementSet::npos; i = s.find_next(i)) {
    m |= oracle::bit(static_cast<int>(i));
  }
  return m;
}

inline topolens::FinSpace sierpinski() { return topolens::build_space(2, {topolens::PointSet{1}}); }
inline topolens::FinSpace indiscrete(int n) { return topolens::build_space(n, {}); }
inline topolens::FinSpace discrete(int n) {
  std::vector<topolens::PointSet> sub;
  for (int x = 0; x < n; ++x) sub.push_back(topolens::PointSet::single(x));
  return topolens::build_space(n, sub);
}

}  // namespace testing_support
