#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "topolens/errors.hpp"
#include "topolens/space.hpp"

using namespace topolens;
using testing_support::discrete;
using testing_support::indiscrete;
using testing_support::sierpinski;
using testing_support::to_topology;

namespace {

std::vector<PointSet> ps(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<PointSet> out;
  for (auto s : sets) out.emplace_back(s);
  return out;
}

}  // namespace

TEST_CASE("build_space examples") {
  CHECK(sierpinski().opens() == ps({{}, {1}, {0, 1}}));
  CHECK(indiscrete(3).opens() == ps({{}, {0, 1, 2}}));
  CHECK(discrete(2).opens() == ps({{}, {0}, {1}, {0, 1}}));
}

TEST_CASE("build_space agrees with naive closure under unions and intersections") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(draw_below(rng, 6));
    const int k = static_cast<int>(draw_below(rng, 5));
    std::vector<PointSet> sub;
    std::vector<oracle::Mask> raw;
    for (int i = 0; i < k; ++i) {
      const auto bits = draw_below(rng, std::uint64_t{1} << n);
      sub.emplace_back(bits);
      raw.push_back(bits);
    }
    CHECK(to_topology(build_space(n, sub)).opens == oracle::generate(n, raw).opens);
  }
}

TEST_CASE("from_opens rejects families that are not topologies") {
  CHECK_THROWS_AS(FinSpace::from_opens(2, ps({{}, {0}})), InputError);
  CHECK_THROWS_AS(FinSpace::from_opens(3, ps({{}, {0}, {1}, {0, 1, 2}})), InputError);
  CHECK_THROWS_AS(FinSpace::from_opens(2, ps({{0}, {0, 1}})), InputError);
  CHECK_NOTHROW(FinSpace::from_opens(2, ps({{}, {1}, {0, 1}})));
}

TEST_CASE("specialization preorder examples") {
  const Preorder s = specialization_preorder(sierpinski());
  CHECK(s.leq(0, 1));
  CHECK_FALSE(s.leq(1, 0));
  const Preorder d = specialization_preorder(discrete(2));
  CHECK(d.strict_pairs().empty());
  const Preorder i = specialization_preorder(indiscrete(2));
  CHECK(i.leq(0, 1));
  CHECK(i.leq(1, 0));
}

TEST_CASE("alexandroff examples") {
  CHECK(alexandroff_space(Preorder::from_pairs(2, {{0, 1}})) == sierpinski());
  CHECK(alexandroff_space(Preorder::from_pairs(2, {})) == discrete(2));
}

TEST_CASE("preorder construction") {
  const Preorder p = Preorder::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p.is_partial_order());
  CHECK_THROWS_AS(Preorder::from_pairs(3, {{0, 1}, {1, 2}}, true), InputError);
  CHECK_NOTHROW(Preorder::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}}, true));
  CHECK_THROWS_AS(Preorder::from_pairs(2, {{0, 2}}), InputError);
  CHECK_FALSE(Preorder::from_pairs(2, {{0, 1}, {1, 0}}).is_partial_order());
}

TEST_CASE("preorder enumeration matches brute-force topology enumeration") {
  const int expected[] = {0, 1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    const std::vector<Preorder> pre = all_preorders(n);
    const std::vector<oracle::Topology> tops = oracle::all_topologies(n);
    CHECK(static_cast<int>(pre.size()) == expected[n]);
    CHECK(tops.size() == pre.size());
    std::set<std::vector<oracle::Mask>> from_lib;
    std::set<std::vector<oracle::Mask>> from_oracle;
    for (const Preorder& p : pre) from_lib.insert(to_topology(alexandroff_space(p)).opens);
    for (const oracle::Topology& t : tops) from_oracle.insert(t.opens);
    CHECK(from_lib == from_oracle);
  }
}

TEST_CASE("five-point enumeration counts") {
  const std::vector<Preorder> pre = all_preorders(5);
  CHECK(pre.size() == 6942);
  CHECK(std::count_if(pre.begin(), pre.end(), [](const Preorder& p) { return p.is_partial_order(); }) ==
        4231);
}

TEST_CASE("alexandroff round trip on every preorder up to four points") {
  for (int n = 1; n <= 4; ++n) {
    for (const Preorder& p : all_preorders(n)) {
      CHECK(specialization_preorder(alexandroff_space(p)) == p);
    }
  }
}

TEST_CASE("specialization order matches the oracle") {
  for (const oracle::Topology& t : oracle::all_topologies(3)) {
    const Preorder p = specialization_preorder(testing_support::to_space(t));
    for (int x = 0; x < t.n; ++x) {
      for (int y = 0; y < t.n; ++y) CHECK(p.leq(x, y) == oracle::spec_leq(t, x, y));
    }
  }
}

TEST_CASE("hulls examples") {
  const Hulls a = hulls(sierpinski(), PointSet{1});
  CHECK(a.closure == PointSet{0, 1});
  CHECK(a.saturation == PointSet{1});
  const Hulls b = hulls(sierpinski(), PointSet{0});
  CHECK(b.closure == PointSet{0});
  CHECK(b.saturation == PointSet{0, 1});
  const Hulls e = hulls(discrete(3), PointSet{});
  CHECK(e.closure.empty());
  CHECK(e.saturation.empty());
  CHECK(e.upset.empty());
  CHECK(e.downset.empty());
}

TEST_CASE("hulls agree with the oracle on every three-point topology") {
  for (const oracle::Topology& t : oracle::all_topologies(3)) {
    const FinSpace s = testing_support::to_space(t);
    for (oracle::Mask a = 0; a < 8; ++a) {
      const Hulls h = hulls(s, PointSet(a));
      CHECK(h.closure.bits() == oracle::closure(t, a));
      CHECK(h.saturation.bits() == oracle::saturation(t, a));
      CHECK(h.downset.bits() == oracle::down(t, a));
      CHECK(s.closure(PointSet(a)) == h.closure);
      CHECK(s.interior(PointSet(a)).subset_of(PointSet(a)));
      CHECK(s.is_open(s.interior(PointSet(a))));
    }
  }
}

TEST_CASE("irreducible closed sets examples") {
  const std::vector<IrreducibleClosed> s = irreducible_closed_sets(sierpinski());
  REQUIRE(s.size() == 2);
  CHECK(s[0].set == PointSet{0});
  CHECK(s[0].generic_points == PointSet{0});
  CHECK(s[1].set == PointSet{0, 1});
  CHECK(s[1].generic_points == PointSet{1});

  const std::vector<IrreducibleClosed> d = irreducible_closed_sets(discrete(2));
  REQUIRE(d.size() == 2);
  CHECK(d[0].set == PointSet{0});
  CHECK(d[1].set == PointSet{1});

  const std::vector<IrreducibleClosed> i = irreducible_closed_sets(indiscrete(2));
  REQUIRE(i.size() == 1);
  CHECK(i[0].set == PointSet{0, 1});
  CHECK(i[0].generic_points == PointSet{0, 1});
}

TEST_CASE("compactness by both methods") {
  CHECK(is_compact(sierpinski(), PointSet{0, 1}, CompactnessMethod::kOpenCover));
  CHECK(is_compact(sierpinski(), PointSet{0, 1}, CompactnessMethod::kFilteredClosed));
  for (const Preorder& p : all_preorders(3)) {
    const FinSpace s = alexandroff_space(p);
    for (PointSet::Word a = 0; a < 8; ++a) {
      CHECK(is_compact(s, PointSet(a), CompactnessMethod::kOpenCover));
      CHECK(is_compact(s, PointSet(a), CompactnessMethod::kFilteredClosed));
    }
  }
}

TEST_CASE("ultrafilter limits") {
  CHECK(ultrafilter_limits(sierpinski(), PrincipalUltrafilter{1}) == PointSet{0, 1});
  CHECK(ultrafilter_limits(discrete(3), PrincipalUltrafilter{2}) == PointSet{2});
  CHECK(ultrafilter_limits(indiscrete(2), PrincipalUltrafilter{0}) == PointSet{0, 1});
  for (const oracle::Topology& t : oracle::all_topologies(3)) {
    const FinSpace s = testing_support::to_space(t);
    for (int p = 0; p < 3; ++p) {
      CHECK(ultrafilter_limits(s, PrincipalUltrafilter{p}).bits() == oracle::ultrafilter_limit(t, p));
    }
  }
}

TEST_CASE("open enumeration cap") {
  CHECK_THROWS_AS(discrete(20).opens(), CapacityError);
  CHECK(discrete(4).opens(16).size() == 16);
  CHECK_THROWS_AS(discrete(4).opens(15), CapacityError);
}

TEST_CASE("seeded draws are reproducible and in range") {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = draw_below(a, 7);
    CHECK(x == draw_below(b, 7));
    CHECK(x < 7);
    const double u = draw_unit(a);
    CHECK(u == draw_unit(b));
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
