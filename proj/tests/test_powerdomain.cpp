#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "topolens/errors.hpp"
#include "topolens/powerdomain.hpp"
#include "topolens/suite.hpp"

using namespace topolens;
using testing_support::discrete;
using testing_support::sierpinski;
using testing_support::to_topology;

namespace {

std::vector<oracle::Mask> lens_masks(const std::vector<Lens>& ls) {
  std::vector<oracle::Mask> out;
  for (const Lens& l : ls) out.push_back(l.members.bits());
  return out;
}

}  // namespace

TEST_CASE("lens examples") {
  CHECK(lens_masks(lenses(sierpinski())) == std::vector<oracle::Mask>{1, 2, 3});
  CHECK(lens_masks(lenses(discrete(2))) == std::vector<oracle::Mask>{1, 2, 3});
  CHECK(lens_masks(lenses(discrete(1))) == std::vector<oracle::Mask>{1});
  CHECK(is_lens(sierpinski(), PointSet{0}));
  CHECK_FALSE(is_lens(sierpinski(), PointSet{}));
  const FinSpace v = alexandroff_space(Preorder::from_pairs(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_lens(v, PointSet{0, 2}));
}

TEST_CASE("lens enumerations agree with the oracle up to four points") {
  for (int n = 1; n <= 4; ++n) {
    for (const oracle::Topology& t : oracle::all_topologies(n)) {
      const FinSpace s = testing_support::to_space(t);
      const std::vector<oracle::Mask> expected = oracle::lenses(t);
      CHECK(lens_masks(lenses_by_intersection(s)) == expected);
      CHECK(lens_masks(lenses_by_fixed_point(s)) == expected);
    }
  }
}

TEST_CASE("quasi-lens examples") {
  const std::vector<QuasiLens> s = quasi_lenses(sierpinski());
  REQUIRE(s.size() == 3);
  CHECK(s[0] == QuasiLens{PointSet{1}, PointSet{0, 1}});
  CHECK(s[1] == QuasiLens{PointSet{0, 1}, PointSet{0}});
  CHECK(s[2] == QuasiLens{PointSet{0, 1}, PointSet{0, 1}});
  const std::vector<QuasiLens> one = quasi_lenses(discrete(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == QuasiLens{PointSet{0}, PointSet{0}});
  const std::vector<QuasiLens> d = quasi_lenses(discrete(2));
  CHECK(d.size() == 3);
  for (const QuasiLens& q : d) CHECK(q.q == q.c);
}

TEST_CASE("quasi-lenses agree with the literal conditions up to four points") {
  for (int n = 1; n <= 4; ++n) {
    for (const oracle::Topology& t : oracle::all_topologies(n)) {
      const FinSpace s = testing_support::to_space(t);
      std::vector<QuasiLens> expected;
      for (oracle::Mask q = 0; q <= oracle::full(n); ++q) {
        for (oracle::Mask c = 0; c <= oracle::full(n); ++c) {
          if (oracle::quasi_lens(t, q, c)) expected.push_back({PointSet(q), PointSet(c)});
        }
      }
      CHECK(quasi_lenses(s) == expected);
    }
  }
}

TEST_CASE("iota and rho") {
  const FinSpace s = sierpinski();
  CHECK(iota(s, Lens{PointSet{1}}) == QuasiLens{PointSet{1}, PointSet{0, 1}});
  CHECK(rho(s, QuasiLens{PointSet{0, 1}, PointSet{0}}) == Lens{PointSet{0}});
  CHECK_THROWS_AS(iota(s, Lens{PointSet{}}), InputError);
  CHECK_THROWS_AS(rho(s, QuasiLens{PointSet{0}, PointSet{0}}), InputError);
  for (int n = 1; n <= 4; ++n) {
    for (const Preorder& p : all_preorders(n)) {
      const FinSpace x = alexandroff_space(p);
      for (const Lens& l : lenses(x)) CHECK(rho(x, iota(x, l)) == l);
      for (const QuasiLens& q : quasi_lenses(x)) CHECK(iota(x, rho(x, q)) == q);
    }
  }
}

TEST_CASE("hyperspace examples") {
  const Hyperspace one = hyperspace(discrete(1), HyperspaceKind::kLensVietoris);
  CHECK(one.space.size() == 1);
  CHECK(hyperspace(discrete(1), HyperspaceKind::kQuasiVietoris).space.size() == 1);

  const Hyperspace h = hyperspace(sierpinski(), HyperspaceKind::kLensVietoris);
  CHECK(h.space.size() == 3);
  // Carrier points 0, 1, 2 are the lenses {0}, {1}, {0,1}.
  const auto k = std::find(h.base_opens.begin(), h.base_opens.end(), PointSet{1}) - h.base_opens.begin();
  REQUIRE(static_cast<std::size_t>(k) < h.base_opens.size());
  CHECK(h.box[k] == PointSet{1});
  CHECK(h.diamond[k] == PointSet{1, 2});
}

TEST_CASE("TEM and EM orders") {
  const FinSpace s = sierpinski();
  CHECK(tem_leq(s, Lens{PointSet{0}}, Lens{PointSet{0, 1}}));
  CHECK(em_leq(s, Lens{PointSet{0}}, Lens{PointSet{0, 1}}));
  for (int n = 1; n <= 3; ++n) {
    for (const Preorder& p : all_preorders(n)) {
      const FinSpace x = alexandroff_space(p);
      const std::vector<Lens> ls = lenses(x);
      for (const Lens& a : ls) {
        CHECK(tem_leq(x, a, a));
        for (const Lens& b : ls) CHECK(tem_leq(x, a, b) == em_leq(x, a, b));
      }
    }
  }
}

TEST_CASE("embedding report") {
  const HyperspaceReport s = check_embedding(sierpinski());
  CHECK(s.iota_homeomorphism);
  CHECK(s.lens_count == 3);
  CHECK(s.quasi_lens_count == 3);
  CHECK(check_embedding(discrete(1)).iota_homeomorphism);
  for (int n = 1; n <= 4; ++n) {
    for (const Preorder& p : all_preorders(n)) CHECK(order_report(alexandroff_space(p)).all_hold());
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) CHECK(check_embedding(random_space(6, rng)).all_hold());
}

TEST_CASE("hyperspace capacity") {
  CHECK_THROWS_AS(hyperspace(discrete(7), HyperspaceKind::kLensVietoris), CapacityError);
}

TEST_CASE("closure hypothesis") {
  for (int n = 1; n <= 4; ++n) {
    for (const Preorder& p : all_preorders(n)) CHECK(lemma_hypothesis_check(alexandroff_space(p)).holds);
  }
  const FinSpace s = sierpinski();
  const PointSet c{0, 1};
  for (PointSet u : s.opens()) {
    if (PointSet{1}.subset_of(u)) CHECK(c.subset_of(s.closure(u & c)));
  }
  CHECK(c.subset_of(s.closure(PointSet{1} & c)));
}

TEST_CASE("formatting and DOT output") {
  CHECK(format_set(PointSet{0, 2}) == "{0,2}");
  CHECK(format_set(PointSet{}) == "{}");
  const std::string a = lens_order_dot(sierpinski());
  CHECK(a == lens_order_dot(sierpinski()));
  CHECK(a.find("digraph") != std::string::npos);
  CHECK(a.find("rankdir=BT") != std::string::npos);
  CHECK(quasi_lens_dot(sierpinski()).find("digraph") != std::string::npos);
}
