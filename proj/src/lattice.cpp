#include "topolens/lattice.hpp"

#include <string>

#include "topolens/errors.hpp"

namespace topolens {

namespace {

void check_size(int m) {
  if (m < 1) throw InputError("a lattice needs at least one element");
  if (m > kMaxLatticeElements) {
    throw CapacityError("lattice has " + std::to_string(m) + " elements; cap is " +
                        std::to_string(kMaxLatticeElements));
  }
}

// Greatest element of `lower` when it exists, i.e. g in lower with
// lower subset of down(g).
int greatest_in(const ElementSet& lower, const std::vector<ElementSet>& down) {
  for (auto g = lower.find_first(); g != ElementSet::npos; g = lower.find_next(g)) {
    if (lower.is_subset_of(down[g])) return static_cast<int>(g);
  }
  return -1;
}

}  // namespace

FinLattice FinLattice::from_order(int m, const std::vector<std::pair<int, int>>& leq) {
  check_size(m);
  std::vector<ElementSet> up(m, ElementSet(m));
  for (int a = 0; a < m; ++a) up[a].set(a);
  for (auto [a, b] : leq) {
    if (a < 0 || a >= m || b < 0 || b >= m) {
      throw InputError("lattice pair (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") out of range");
    }
    up[a].set(b);
  }
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  std::vector<ElementSet> down(m, ElementSet(m));
  for (int a = 0; a < m; ++a) {
    for (auto b = up[a].find_first(); b != ElementSet::npos; b = up[a].find_next(b)) {
      down[b].set(a);
    }
  }
  for (int a = 0; a < m; ++a) {
    if ((up[a] & down[a]).count() != 1) {
      throw InputError("order is not antisymmetric at element " + std::to_string(a));
    }
  }
  std::vector<int> meet(static_cast<std::size_t>(m) * m);
  std::vector<int> join(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      const int g = greatest_in(down[a] & down[b], down);
      const int l = greatest_in(up[a] & up[b], up);
      if (g < 0) {
        throw InputError("elements " + std::to_string(a) + " and " + std::to_string(b) +
                         " have no meet");
      }
      if (l < 0) {
        throw InputError("elements " + std::to_string(a) + " and " + std::to_string(b) +
                         " have no join");
      }
      meet[static_cast<std::size_t>(a) * m + b] = meet[static_cast<std::size_t>(b) * m + a] = g;
      join[static_cast<std::size_t>(a) * m + b] = join[static_cast<std::size_t>(b) * m + a] = l;
    }
  }
  return from_tables(std::move(up), std::move(meet), std::move(join));
}

FinLattice FinLattice::from_tables(std::vector<ElementSet> up, std::vector<int> meet,
                                   std::vector<int> join) {
  FinLattice l;
  l.m_ = static_cast<int>(up.size());
  check_size(l.m_);
  const std::size_t cells = static_cast<std::size_t>(l.m_) * l.m_;
  if (meet.size() != cells || join.size() != cells) {
    throw InputError("meet/join tables have the wrong size");
  }
  l.up_ = std::move(up);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.validate_and_finish();
  return l;
}

void FinLattice::validate_and_finish() {
  const int m = m_;
  down_.assign(m, ElementSet(m));
  for (int a = 0; a < m; ++a) {
    if (up_[a].size() != static_cast<std::size_t>(m)) throw InputError("order row has the wrong width");
    if (!up_[a].test(a)) throw InputError("order is not reflexive");
    for (auto b = up_[a].find_first(); b != ElementSet::npos; b = up_[a].find_next(b)) {
      down_[b].set(a);
      if (!up_[b].is_subset_of(up_[a])) throw InputError("order is not transitive");
    }
  }
  for (int a = 0; a < m; ++a) {
    if ((up_[a] & down_[a]).count() != 1) throw InputError("order is not antisymmetric");
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int g = meet(a, b);
      const int l = join(a, b);
      if (g < 0 || g >= m || l < 0 || l >= m) throw InputError("meet/join entry out of range");
      // g is a lower bound, and every lower bound lies below g.
      if (!leq(g, a) || !leq(g, b) || !(down_[a] & down_[b]).is_subset_of(down_[g])) {
        throw InputError("meet table is not the greatest lower bound at (" +
                         std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      if (!leq(a, l) || !leq(b, l) || !(up_[a] & up_[b]).is_subset_of(up_[l])) {
        throw InputError("join table is not the least upper bound at (" +
                         std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  bottom_ = -1;
  top_ = -1;
  for (int a = 0; a < m; ++a) {
    if (up_[a].all()) bottom_ = a;
    if (down_[a].all()) top_ = a;
  }
  if (bottom_ < 0 || top_ < 0) throw InputError("lattice lacks a bottom or a top");
}

int FinLattice::join_of(const ElementSet& s) const {
  int acc = bottom_;
  for (auto a = s.find_first(); a != ElementSet::npos; a = s.find_next(a)) {
    acc = join(acc, static_cast<int>(a));
  }
  return acc;
}

int FinLattice::meet_of(const ElementSet& s) const {
  int acc = top_;
  for (auto a = s.find_first(); a != ElementSet::npos; a = s.find_next(a)) {
    acc = meet(acc, static_cast<int>(a));
  }
  return acc;
}

std::vector<std::pair<int, int>> FinLattice::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m_; ++a) {
    for (auto b = up_[a].find_first(); b != ElementSet::npos; b = up_[a].find_next(b)) {
      if (static_cast<int>(b) != a) out.emplace_back(a, static_cast<int>(b));
    }
  }
  return out;
}

std::vector<int> elements_of(const ElementSet& s) {
  std::vector<int> out;
  for (auto a = s.find_first(); a != ElementSet::npos; a = s.find_next(a)) {
    out.push_back(static_cast<int>(a));
  }
  return out;
}

ElementSet element_set(int m, const std::vector<int>& members) {
  ElementSet s(m);
  for (int a : members) s.set(a);
  return s;
}

FinLattice chain_lattice(int m) {
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a + 1 < m; ++a) leq.emplace_back(a, a + 1);
  return FinLattice::from_order(m, leq);
}

FinLattice boolean_lattice(int atoms) {
  const int m = 1 << atoms;
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && (a & ~b) == 0) leq.emplace_back(a, b);
    }
  }
  return FinLattice::from_order(m, leq);
}

FinLattice diamond_m3() {
  // 0 = bottom, 1..3 atoms, 4 = top.
  return FinLattice::from_order(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FinLattice pentagon_n5() {
  // 0 < 1 < 2 < 4 and 0 < 3 < 4.
  return FinLattice::from_order(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

}  // namespace topolens
