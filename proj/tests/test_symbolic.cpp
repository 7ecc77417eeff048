#include <random>

#include "doctest.h"
#include "topolens/errors.hpp"
#include "topolens/symbolic.hpp"

using namespace topolens;
using nlohmann::json;
using Nat = CofinSet::Nat;

namespace {

constexpr Nat kWindow = 40;

// Membership on 0..kWindow decides every set with support below kWindow.
std::vector<bool> window(const CofinSet& s) {
  std::vector<bool> out;
  for (Nat n = 0; n <= kWindow; ++n) out.push_back(s.contains(n));
  return out;
}

std::vector<SymPoint> window_points(const EffectiveSpace& s) {
  std::vector<SymPoint> out;
  for (Nat n = 0; n <= kWindow; ++n) out.push_back(SymPoint::nat(n));
  for (Special x : {kA, kB, kOmega}) {
    if (s.extras() & x) out.push_back(SymPoint::extra(x));
  }
  return out;
}

// Supports stay inside {0..7}, far from the window edge, so every infinite
// set has members in the window above every probed point.
SymSet random_set(const EffectiveSpace& s, std::mt19937_64& rng) {
  std::vector<Nat> support;
  for (Nat i = 0; i < 8; ++i) {
    if (draw_below(rng, 3) == 0) support.push_back(i);
  }
  const CofinSet nat = draw_below(rng, 2) ? CofinSet::cofinite(support) : CofinSet::finite(support);
  return SymSet{nat, static_cast<std::uint8_t>(draw_below(rng, 8) & s.extras())};
}

SymSet window_upset(const EffectiveSpace& s, const SymSet& a) {
  SymSet out;
  for (const SymPoint& y : window_points(s)) {
    for (const SymPoint& x : window_points(s)) {
      if (a.contains(x) && s.leq(x, y)) out = out.unite(SymSet::point(y));
    }
  }
  return out;
}

bool agree_on_window(const EffectiveSpace& s, const SymSet& a, const SymSet& b) {
  for (const SymPoint& p : window_points(s)) {
    if (p.is_nat() && p.n > 20) continue;
    if (a.contains(p) != b.contains(p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cofinite set algebra examples") {
  CHECK(CofinSet::finite({0, 1}).complement() == CofinSet::cofinite({0, 1}));
  CHECK(CofinSet::cofinite({1}).unite(CofinSet::finite({1})) == CofinSet::all());
  CHECK(CofinSet::finite({2, 3}).subset_of(CofinSet::cofinite({0})));
  CHECK(CofinSet::finite({3, 1, 3}).support() == std::vector<Nat>{1, 3});
  CHECK(CofinSet::at_least(2) == CofinSet::cofinite({0, 1}));
  CHECK(CofinSet::cofinite({0}).str() == "cofinite{0}");
  CHECK(CofinSet::finite({}).str() == "finite{}");
  CHECK(CofinSet::finite({4, 7}).max() == 7);
  CHECK(CofinSet::cofinite({0, 1}).min() == Nat{2});
  CHECK_FALSE(CofinSet::empty_set().min().has_value());
  CHECK_THROWS_AS(CofinSet::from_canonical(false, {2, 1}), InputError);
  CHECK_THROWS_AS(CofinSet::from_canonical(true, {1, 1}), InputError);
  CHECK(CofinSet::from_canonical(true, {1, 2}) == CofinSet::cofinite({1, 2}));
  CHECK(std::get<CofinSet>(cofin_algebra(CofinSet::finite({0}), {}, CofinOp::kComplement)) ==
        CofinSet::cofinite({0}));
  CHECK(std::get<bool>(cofin_algebra(CofinSet::finite({0}), CofinSet::all(), CofinOp::kSubset)));
}

TEST_CASE("set algebra agrees with pointwise membership") {
  const std::vector<CofinSet> sets = representable_sets(4);
  CHECK(sets.size() == 64);
  for (const CofinSet& a : sets) {
    CHECK(window(a.complement()) == [&] {
      std::vector<bool> w = window(a);
      w.flip();
      return w;
    }());
    for (const CofinSet& b : sets) {
      std::vector<bool> u;
      std::vector<bool> i;
      bool subset = true;
      for (Nat n = 0; n <= kWindow; ++n) {
        u.push_back(a.contains(n) || b.contains(n));
        i.push_back(a.contains(n) && b.contains(n));
        if (a.contains(n) && !b.contains(n)) subset = false;
      }
      CHECK(window(a.unite(b)) == u);
      CHECK(window(a.intersect(b)) == i);
      CHECK(a.subset_of(b) == subset);
      CHECK((a == b) == (window(a) == window(b)));
    }
  }
}

TEST_CASE("cofinite topology operations") {
  const CofiniteOps c = cofinite_space_ops(CofinSet::cofinite({0}));
  CHECK(c.is_open);
  CHECK_FALSE(c.is_closed);
  CHECK(c.closure == CofinSet::all());
  const CofiniteOps f = cofinite_space_ops(CofinSet::finite({5}));
  CHECK(f.is_closed);
  CHECK(f.closure == CofinSet::finite({5}));
  CHECK(cofinite_is_compact(CofinSet::all(), CompactnessMethod::kOpenCover));
  CHECK(cofinite_is_compact(CofinSet::all(), CompactnessMethod::kFilteredClosed));
}

TEST_CASE("cofinite quasi-lens decisions") {
  CHECK(cn_quasi_lens(CofinSet::finite({0}), CofinSet::finite({0})).is_quasi_lens);
  CHECK(cn_quasi_lens(CofinSet::finite({0}), CofinSet::all()).is_quasi_lens);
  CHECK_FALSE(cn_image_of_iota(CofinSet::finite({0}), CofinSet::all()));
  const QuasiLensDecision bad = cn_quasi_lens(CofinSet::cofinite({0}), CofinSet::finite({1, 2}));
  CHECK_FALSE(bad.is_quasi_lens);
  CHECK_FALSE(bad.condition2);
  for (const CofinSet& q : representable_sets(4)) {
    for (const CofinSet& c : representable_sets(4)) {
      CHECK(cn_quasi_lens(q, c).is_quasi_lens == cn_quasi_lens_classification(q, c));
    }
  }
}

TEST_CASE("cofinite iota") {
  CHECK(cn_iota(CofinSet::finite({3, 4})) ==
        std::pair{CofinSet::finite({3, 4}), CofinSet::finite({3, 4})});
  CHECK(cn_iota(CofinSet::cofinite({0})) == std::pair{CofinSet::cofinite({0}), CofinSet::all()});
  CHECK_THROWS_AS(cn_iota(CofinSet::empty_set()), InputError);
  CHECK(cn_tem_leq(CofinSet::all(), CofinSet::cofinite({0})));
  CHECK_FALSE(cn_em_leq(CofinSet::all(), CofinSet::cofinite({0})));
}

TEST_CASE("backend hull operators are exact") {
  for (BackendId id : {BackendId::kCofiniteNat, BackendId::kScottNatAb, BackendId::kAlexNatOmega}) {
    const auto s = make_backend(id);
    CHECK(backend_from_name(backend_name(id)) == id);
    std::mt19937_64 rng(17 + static_cast<int>(id));
    std::vector<SymSet> sample;
    for (int i = 0; i < 500; ++i) sample.push_back(random_set(*s, rng));
    for (const SymSet& a : sample) {
      const SymSet cl = s->closure(a);
      CHECK(a.subset_of(cl));
      CHECK(s->is_closed(cl));
      CHECK(s->closure(cl) == cl);
      for (const SymSet& b : sample) {
        if (s->is_closed(b) && a.subset_of(b)) CHECK(cl.subset_of(b));
      }
      CHECK(agree_on_window(*s, s->upset(a), window_upset(*s, a)));
      CHECK(a.subset_of(s->upset(a)));
      CHECK(s->downset(a).subset_of(cl));
      if (id != BackendId::kCofiniteNat) CHECK(s->is_open(a) == (s->upset(a) == a));
    }
  }
  CHECK_THROWS_AS(backend_from_name("reals"), InputError);
}

TEST_CASE("cofinite backend opens are the empty and cofinite sets") {
  const auto s = make_backend(BackendId::kCofiniteNat);
  CHECK(s->is_open(SymSet{}));
  CHECK(s->is_open(SymSet::of_nat(CofinSet::cofinite({3}))));
  CHECK_FALSE(s->is_open(SymSet::of_nat(CofinSet::finite({3}))));
}

TEST_CASE("specialization order of the a, b example") {
  const auto s = make_backend(BackendId::kScottNatAb);
  const SymPoint a = SymPoint::extra(kA);
  const SymPoint b = SymPoint::extra(kB);
  for (Nat n = 0; n < 10; ++n) {
    CHECK(s->leq(a, SymPoint::nat(n)));
    CHECK(s->leq(b, SymPoint::nat(n)));
    CHECK_FALSE(s->leq(SymPoint::nat(n), a));
    for (Nat m = 0; m < 10; ++m) CHECK(s->leq(SymPoint::nat(n), SymPoint::nat(m)) == (n == m));
    // x <= y iff every open around x contains y, over the opens up(x).
    for (const SymPoint& x : {a, b, SymPoint::nat(n)}) {
      const SymSet nb = s->upset(SymSet::point(x));
      CHECK(s->is_open(nb));
      for (const SymPoint& y : {a, b, SymPoint::nat(n), SymPoint::nat(n + 1)}) {
        CHECK(nb.contains(y) == s->leq(x, y));
      }
    }
  }
  CHECK_FALSE(s->leq(a, b));
  const SymSet meet = s->upset(SymSet::point(a)).intersect(s->upset(SymSet::point(b)));
  CHECK(meet == SymSet::of_nat(CofinSet::all()));
}

TEST_CASE("omega example order") {
  const auto s = make_backend(BackendId::kAlexNatOmega);
  const SymPoint w = SymPoint::extra(kOmega);
  CHECK(s->leq(SymPoint::nat(3), SymPoint::nat(5)));
  CHECK_FALSE(s->leq(SymPoint::nat(5), SymPoint::nat(3)));
  CHECK(s->leq(SymPoint::nat(100), w));
  CHECK_FALSE(s->leq(w, SymPoint::nat(100)));
  CHECK(s->is_open(SymSet::point(w)));
  CHECK(s->upper_bounds(SymSet::of_nat(CofinSet::all())) == SymSet::point(w));
}

TEST_CASE("certificate examples") {
  const json all = sym_set_to_json(SymSet::of_nat(CofinSet::all()));
  const Certificate cover{"non_compact_singleton_cover", "scott_nat_ab",
                          json{{"target", all}, {"meet_of_upsets", json::array({"a", "b"})}}};
  CHECK(certificate_check(BackendId::kScottNatAb, cover).valid);
  const Certificate directed{
      "non_monotone_convergence_directed", "alex_nat_omega",
      json{{"chain_from", 0}, {"sup", "omega"}, {"open", json{{"finite", json::array()}, {"extra", {"omega"}}}}}};
  CHECK(certificate_check(BackendId::kAlexNatOmega, directed).valid);
  const Certificate pair{"non_weakly_hausdorff_pair", "cofinite_nat",
                         json{{"x", 0}, {"y", 1}, {"w", json{{"finite", json::array()}}}}};
  CHECK(certificate_check(BackendId::kCofiniteNat, pair).valid);
  const Certificate sober{"non_sober_irreducible", "cofinite_nat", json{{"closed", all}}};
  CHECK(certificate_check(BackendId::kCofiniteNat, sober).valid);
  for (const Certificate& c : builtin_certificates()) {
    CHECK(certificate_check(backend_from_name(c.space), c).valid);
    const Certificate back = Certificate::from_json(json::parse(c.to_json().dump()));
    CHECK(back.to_json() == c.to_json());
  }
}

TEST_CASE("certificates that should not verify") {
  const Certificate finite_cover{"non_compact_singleton_cover", "scott_nat_ab",
                                 json{{"target", json{{"finite", {1, 2}}}}}};
  CHECK_FALSE(certificate_check(BackendId::kScottNatAb, finite_cover).valid);
  const Certificate cofinite_w{"non_weakly_hausdorff_pair", "cofinite_nat",
                               json{{"x", 0}, {"y", 1}, {"w", json{{"cofinite", {0}}}}}};
  CHECK_FALSE(certificate_check(BackendId::kCofiniteNat, cofinite_w).valid);
  const Certificate singleton{"non_sober_irreducible", "cofinite_nat",
                              json{{"closed", json{{"finite", {4}}}}}};
  CHECK_FALSE(certificate_check(BackendId::kCofiniteNat, singleton).valid);
  const Certificate wrong_sup{"non_monotone_convergence_directed", "alex_nat_omega",
                              json{{"chain_from", 0}, {"sup", 7}, {"open", json{{"cofinite", {0}}}}}};
  CHECK_FALSE(certificate_check(BackendId::kAlexNatOmega, wrong_sup).valid);
}

TEST_CASE("malformed certificates are input errors") {
  CHECK_THROWS_AS(Certificate::from_json(json{{"kind", "x"}}), InputError);
  const Certificate unsupported{"non_monotone_convergence_directed", "cofinite_nat",
                                json{{"chain_from", 0}}};
  CHECK_THROWS_AS(certificate_check(BackendId::kCofiniteNat, unsupported), InputError);
  const Certificate mismatch{"non_sober_irreducible", "scott_nat_ab", json::object()};
  CHECK_THROWS_AS(certificate_check(BackendId::kCofiniteNat, mismatch), InputError);
  const Certificate missing{"non_sober_irreducible", "cofinite_nat", json::object()};
  CHECK_THROWS_AS(certificate_check(BackendId::kCofiniteNat, missing), InputError);
  const Certificate outside{"non_weakly_hausdorff_pair", "cofinite_nat",
                            json{{"x", "a"}, {"y", 1}, {"w", json{{"finite", json::array()}}}}};
  CHECK_THROWS_AS(certificate_check(BackendId::kCofiniteNat, outside), InputError);
}

TEST_CASE("set and point JSON round trips") {
  const SymSet s{CofinSet::cofinite({2, 5}), static_cast<std::uint8_t>(kA | kOmega)};
  CHECK(sym_set_from_json(sym_set_to_json(s)) == s);
  CHECK(point_from_json(point_to_json(SymPoint::nat(9))) == SymPoint::nat(9));
  CHECK(point_from_json(json("b")) == SymPoint::extra(kB));
  CHECK_THROWS_AS(point_from_json(json(-1)), InputError);
  CHECK_THROWS_AS(point_from_json(json("c")), InputError);
  CHECK_THROWS_AS(sym_set_from_json(json{{"finite", {3, 1}}}), InputError);
}

TEST_CASE("counterexample suite") {
  const CounterexampleReport r = cn_counterexample_suite();
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 12);
  for (const NamedCheck& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}
