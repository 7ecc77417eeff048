#include "topolens/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "topolens/errors.hpp"
#include "topolens/frames.hpp"
#include "topolens/io.hpp"
#include "topolens/powerdomain.hpp"
#include "topolens/properties.hpp"
#include "topolens/symbolic.hpp"

namespace topolens {

using nlohmann::json;

std::vector<std::string> suite_names() {
  return {"spaces", "frames", "powerdomain", "lattices", "examples"};
}

void validate(const SuiteConfig& config) {
  const std::vector<std::string> names = suite_names();
  for (const std::string& s : config.suites) {
    if (s != "all" && std::find(names.begin(), names.end(), s) == names.end()) {
      throw InputError("unknown suite: " + s);
    }
  }
  const int cap = config.allow_five ? kOptInPointCap : kDefaultPointCap;
  if (config.max_points < 1 || config.max_points > cap) {
    throw InputError("max_points must be in [1, " + std::to_string(cap) + "]" +
                     (config.allow_five ? "" : "; 5 needs the opt-in flag"));
  }
  if (config.samples < 0) throw InputError("samples must be non-negative");
}

FinSpace random_space(int n, std::mt19937_64& rng) {
  const double density = 0.05 + 0.35 * draw_unit(rng);
  if (draw_below(rng, 2) == 0) return alexandroff_space(random_preorder(n, density, rng));
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (draw_unit(rng) < density) pairs.emplace_back(x, y);
    }
  }
  return alexandroff_space(Preorder::from_pairs(n, pairs));
}

FinLattice random_distributive_lattice(int max_m, std::mt19937_64& rng) {
  if (max_m < 1) throw InputError("max_m must be positive");
  while (true) {
    const int k = static_cast<int>(draw_below(rng, 5));
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < k; ++x) {
      for (int y = x + 1; y < k; ++y) {
        if (draw_unit(rng) < 0.4) pairs.emplace_back(x, y);
      }
    }
    const OpenLattice ol = lattice_of_opens(alexandroff_space(Preorder::from_pairs(k, pairs)));
    const int m = ol.lattice.size();
    if (m > max_m) continue;
    std::vector<int> relabel(m);
    std::iota(relabel.begin(), relabel.end(), 0);
    for (int i = m - 1; i > 0; --i) {
      std::swap(relabel[i], relabel[draw_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    }
    std::vector<std::pair<int, int>> order;
    for (auto [a, b] : ol.lattice.strict_pairs()) order.emplace_back(relabel[a], relabel[b]);
    return FinLattice::from_order(m, order);
  }
}

json replay_form(const FinSpace& space) {
  json sub = json::array();
  for (int x = 0; x < space.size(); ++x) sub.push_back(point_list(space.min_neighbourhood(x)));
  return json{{"n", space.size()}, {"subbasis", sub}};
}

namespace {

constexpr std::size_t kMaxWitnesses = 50;

struct Instance {
  std::string id;
  FinSpace space;
};

class Tally {
 public:
  void record(const std::string& theorem, bool ok, const std::string& instance_id,
              const json& instance, const std::string& detail) {
    auto& [pass, fail] = counts_[theorem];
    if (ok) {
      ++pass;
      return;
    }
    ++fail;
    if (witnesses_.size() < kMaxWitnesses) {
      witnesses_.push_back(json{{"theorem", theorem},
                                {"instance_id", instance_id},
                                {"instance", instance},
                                {"detail", detail}});
    }
  }

  /// Runs `check`, turning invariant violations into failures.
  void guarded(const std::string& theorem, const std::string& instance_id, const json& instance,
               const std::function<std::string()>& check) {
    std::string detail;
    try {
      detail = check();
    } catch (const InvariantViolation& e) {
      detail = std::string("invariant violation: ") + e.what();
    }
    record(theorem, detail.empty(), instance_id, instance, detail);
  }

  bool passed() const {
    return std::all_of(counts_.begin(), counts_.end(),
                       [](const auto& kv) { return kv.second.second == 0; });
  }

  json theorems() const {
    json out = json::object();
    for (const auto& [name, pf] : counts_) out[name] = json{{"pass", pf.first}, {"fail", pf.second}};
    return out;
  }
  const json& witnesses() const { return witnesses_; }

 private:
  std::map<std::string, std::pair<int, int>> counts_;
  json witnesses_ = json::array();
};

std::string join_names(const std::vector<std::string>& v) {
  std::string out;
  for (const std::string& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

void space_laws(const Instance& inst, Tally& t, json& records) {
  const json replay = replay_form(inst.space);
  const FinSpace& s = inst.space;
  SpaceProperties p;
  bool have = false;
  t.guarded("dual_algorithms_agree", inst.id, replay, [&] {
    p = property_report(s);
    have = true;
    // Both computations of lim U run inside ultrafilter_limits.
    for (int x = 0; x < s.size(); ++x) {
      if (ultrafilter_limits(s, PrincipalUltrafilter{x}) != s.point_closure(x)) {
        return std::string("limit set of the principal ultrafilter differs from cl{x}");
      }
    }
    lenses(s);
    return std::string();
  });
  if (!have) return;
  const std::vector<std::string> broken = law_violations(p);
  t.record("implication_laws", broken.empty(), inst.id, replay, join_names(broken));
  t.record("alexandroff_round_trip",
           alexandroff_space(specialization_preorder(s)) == s &&
               specialization_preorder(alexandroff_space(specialization_preorder(s))) ==
                   specialization_preorder(s),
           inst.id, replay, "round trip changed the space");
  bool hull_ok = true;
  const PointSet::Word total = s.points().bits();
  for (PointSet::Word bits = 0;; ++bits) {
    const Hulls h = hulls(s, PointSet(bits));
    if (h.closure != s.closure(PointSet(bits)) || h.saturation != h.upset ||
        h.closure != h.downset) {
      hull_ok = false;
    }
    if (bits == total) break;
  }
  t.record("hulls_agree", hull_ok, inst.id, replay, "hull computations differ");
  records.push_back(json{{"id", inst.id}, {"space", replay}, {"properties", to_json(p)}});
}

void frame_laws(const Instance& inst, Tally& t) {
  const json replay = replay_form(inst.space);
  const FinSpace& s = inst.space;
  t.guarded("frames_of_opens", inst.id, replay, [&] {
    const FinLattice l = lattice_of_opens(s).lattice;
    if (!frame_report(l).is_frame) return std::string("lattice of opens is not a frame");
    const std::vector<Filter> all = filters_of(l, FilterKind::kAll);
    const std::vector<Filter> scott = filters_of(l, FilterKind::kScottOpen);
    if (all.size() != scott.size()) return std::string("a filter is not Scott-open");
    points_space(l);
    return std::string();
  });
  t.guarded("stone_round_trip", inst.id, replay, [&] {
    const DualityReport r = stone_round_trip(s);
    const bool t0 = property_report(s).t0;
    if (r.unit_homeomorphism != t0) return std::string("unit homeomorphism differs from T0");
    if (!t0 && r.unit_injective) return std::string("unit injective on a non-T0 space");
    if (!r.spatial) return std::string("lattice of opens not spatial");
    return std::string();
  });
  t.guarded("hofmann_mislove", inst.id, replay, [&] {
    const DualityReport r = hofmann_mislove_report(s);
    if (!r.hm_bijection || !r.hm_order_reversing) return join_names(r.witnesses);
    return std::string();
  });
  t.guarded("local_temperance_equivalence", inst.id, replay, [&] {
    const SpaceProperties p = property_report(s);
    if (!p.t0) return std::string();
    const FinLattice l = lattice_of_opens(s).lattice;
    const bool lt = temperance_report(l).locally_temperate;
    const bool whc = p.weakly_hausdorff && p.coherent;
    if (!(lt && whc && p.locally_strongly_sober)) {
      return std::string("locally temperate, wH and coherent, lss are not all true");
    }
    return std::string();
  });
  t.guarded("stable_iff_locally_temperate", inst.id, replay, [&] {
    const WayBelowReport r = waybelow_and_stability(lattice_of_opens(s).lattice);
    if (!r.waybelow_equals_leq) return std::string("way-below differs from order");
    if (!r.continuous) return std::string("not continuous");
    if (!r.stable_iff_locally_temperate) return std::string("stable and locally temperate differ");
    return std::string();
  });
}

void powerdomain_laws(const Instance& inst, Tally& t) {
  const json replay = replay_form(inst.space);
  t.guarded("lens_quasi_lens_embedding", inst.id, replay, [&] {
    const HyperspaceReport r = check_embedding(inst.space);
    if (!r.all_hold()) return join_names(r.witnesses);
    if (r.lens_count != r.quasi_lens_count) return std::string("counts differ");
    return std::string();
  });
  t.guarded("lemma_closure_hypothesis", inst.id, replay, [&] {
    const LemmaCheck c = lemma_hypothesis_check(inst.space);
    return c.holds ? std::string() : "fails at " + format_quasi_lens(*c.witness);
  });
}

void lattice_laws(const std::string& id, const FinLattice& l, Tally& t, bool boolean) {
  const json inst = lattice_to_json(l);
  t.guarded("lattice_waybelow_and_stability", id, inst, [&] {
    const WayBelowReport r = waybelow_and_stability(l);
    if (!r.waybelow_equals_leq) return std::string("way-below differs from order");
    if (!r.stable_iff_locally_temperate) return std::string("stable and locally temperate differ");
    return std::string();
  });
  if (!frame_report(l).is_frame) return;
  t.guarded("frame_filters_and_points", id, inst, [&] {
    const std::vector<Filter> fs = filters_of(l, FilterKind::kAll);
    for (const Filter& f : fs) {
      for (const Filter& g : fs) {
        const FilterJoin j = filter_join(l, f.members, g.members);
        if (!j.is_filter || !j.is_least_upper_bound) return std::string("filter join is not the lub");
      }
    }
    points_space(l);
    const TemperanceReport tr = temperance_report(l);
    if (!tr.locally_temperate || !tr.temperate) return std::string("finite frame not temperate");
    return std::string();
  });
  if (boolean) {
    t.record("boolean_locally_temperate", temperance_report(l).locally_temperate, id, inst,
             "Boolean algebra not locally temperate");
  }
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
  validate(config);
  const auto started = std::chrono::steady_clock::now();
  auto wants = [&](const std::string& name) {
    return config.suites.empty() || config.suites.count("all") || config.suites.count(name);
  };

  std::vector<Instance> exhaustive;
  json preorder_counts = json::object();
  json poset_counts = json::object();
  for (int n = 1; n <= config.max_points; ++n) {
    const std::vector<Preorder> ps = all_preorders(n);
    int posets = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (ps[i].is_partial_order()) ++posets;
      exhaustive.push_back({"exhaustive/" + std::to_string(n) + "/" + std::to_string(i),
                            alexandroff_space(ps[i])});
    }
    preorder_counts[std::to_string(n)] = ps.size();
    poset_counts[std::to_string(n)] = posets;
  }

  std::mt19937_64 rng(config.seed);
  std::vector<Instance> random_law_spaces;
  for (int i = 0; i < config.samples; ++i) {
    const int n = 6 + static_cast<int>(draw_below(rng, 3));
    random_law_spaces.push_back({"random/" + std::to_string(i), random_space(n, rng)});
  }
  std::vector<Instance> random_six;
  for (int i = 0; i < config.samples / 5; ++i) {
    random_six.push_back({"random6/" + std::to_string(i), random_space(6, rng)});
  }
  std::vector<FinLattice> random_lattices;
  for (int i = 0; i < config.samples / 10; ++i) {
    random_lattices.push_back(random_distributive_lattice(12, rng));
  }

  Tally tally;
  json records = json::array();
  json counts = json{{"preorders", preorder_counts}, {"partial_orders", poset_counts}};

  if (wants("spaces")) {
    for (const Instance& inst : exhaustive) space_laws(inst, tally, records);
    for (const Instance& inst : random_law_spaces) space_laws(inst, tally, records);
    counts["random_spaces"] = random_law_spaces.size();
  }
  if (wants("frames")) {
    for (const Instance& inst : exhaustive) frame_laws(inst, tally);
    for (const Instance& inst : random_six) frame_laws(inst, tally);
    counts["random_six_point_spaces"] = random_six.size();
  }
  if (wants("powerdomain")) {
    for (const Instance& inst : exhaustive) powerdomain_laws(inst, tally);
    for (const Instance& inst : random_six) powerdomain_laws(inst, tally);
    counts["random_six_point_spaces"] = random_six.size();
  }
  if (wants("lattices")) {
    for (int m = 1; m <= 5; ++m) lattice_laws("chain/" + std::to_string(m), chain_lattice(m), tally, m <= 2);
    for (int a = 0; a <= 4; ++a) {
      lattice_laws("boolean/" + std::to_string(a), boolean_lattice(a), tally, true);
    }
    lattice_laws("m3", diamond_m3(), tally, false);
    lattice_laws("n5", pentagon_n5(), tally, false);
    for (std::size_t i = 0; i < random_lattices.size(); ++i) {
      lattice_laws("distributive/" + std::to_string(i), random_lattices[i], tally, false);
    }
    counts["random_distributive_lattices"] = random_lattices.size();
  }
  if (wants("examples")) {
    const CounterexampleReport r = cn_counterexample_suite();
    for (const NamedCheck& c : r.checks) {
      tally.record("example_" + c.name, c.passed, c.name, json{{"suite", "examples"}}, c.detail);
    }
  }
  counts["exhaustive_spaces"] = exhaustive.size();

  json config_json = json{{"seed", config.seed},
                          {"max_points", config.max_points},
                          {"samples", config.samples},
                          {"suites", config.suites.empty() ? std::set<std::string>{"all"}
                                                           : config.suites}};
  SuiteResult out;
  out.passed = tally.passed();
  out.report = json{{"schema_version", kSchemaVersion},
                    {"config", config_json},
                    {"instance_counts", counts},
                    {"theorems", tally.theorems()},
                    {"witnesses", tally.witnesses()},
                    {"instances", records},
                    {"passed", out.passed}};
  if (config.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    out.report["timing"] = json{{"elapsed_ms", ms}};
  }
  return out;
}

}  // namespace topolens
