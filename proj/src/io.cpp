#include "topolens/io.hpp"

#include "topolens/errors.hpp"

namespace topolens {

using nlohmann::json;

namespace {

int read_count(const json& j, const char* key, int cap) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
  const auto n = v.get<long long>();
  if (n < 0 || n > cap) {
    throw InputError(std::string("\"") + key + "\" must be in [0, " + std::to_string(cap) + "]");
  }
  return static_cast<int>(n);
}

int read_index(const json& v, int n) {
  if (!v.is_number_integer()) throw InputError("indices must be integers");
  const auto x = v.get<long long>();
  if (x < 0 || x >= n) throw InputError("index " + std::to_string(x) + " out of range");
  return static_cast<int>(x);
}

std::vector<PointSet> read_families(const json& j, int n) {
  if (!j.is_array()) throw InputError("expected an array of point lists");
  std::vector<PointSet> out;
  for (const json& member : j) {
    if (!member.is_array()) throw InputError("expected a point list");
    PointSet s;
    for (const json& x : member) s = s.with(read_index(x, n));
    out.push_back(s);
  }
  return out;
}

std::vector<std::pair<int, int>> read_pairs(const json& j, int n) {
  if (!j.is_array()) throw InputError("\"leq\" must be an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) throw InputError("\"leq\" entries must be pairs");
    out.emplace_back(read_index(p[0], n), read_index(p[1], n));
  }
  return out;
}

json opt_triple(const std::optional<std::array<int, 3>>& t) {
  if (!t) return nullptr;
  return json::array({(*t)[0], (*t)[1], (*t)[2]});
}

}  // namespace

FinSpace space_from_json(const json& j) {
  const int n = read_count(j, "n", kMaxCarrier);
  const bool has_opens = j.contains("opens");
  const bool has_subbasis = j.contains("subbasis");
  if (has_opens == has_subbasis) throw InputError("need exactly one of \"opens\" and \"subbasis\"");
  if (has_opens) return FinSpace::from_opens(n, read_families(j.at("opens"), n));
  return build_space(n, read_families(j.at("subbasis"), n));
}

json point_list(PointSet s) { return s.to_vector(); }

json element_list(const ElementSet& s) { return elements_of(s); }

json space_to_json(const FinSpace& space) {
  json opens = json::array();
  for (PointSet u : space.opens()) opens.push_back(point_list(u));
  return json{{"n", space.size()}, {"opens", opens}};
}

Preorder preorder_from_json(const json& j, bool strict) {
  const int n = read_count(j, "n", kMaxCarrier);
  if (!j.contains("leq")) throw InputError("missing \"leq\"");
  return Preorder::from_pairs(n, read_pairs(j.at("leq"), n), strict);
}

json preorder_to_json(const Preorder& p) {
  json pairs = json::array();
  for (auto [x, y] : p.strict_pairs()) pairs.push_back({x, y});
  return json{{"n", p.size()}, {"leq", pairs}};
}

FinLattice lattice_from_json(const json& j) {
  const int m = read_count(j, "m", kMaxLatticeElements);
  if (!j.contains("leq")) throw InputError("missing \"leq\"");
  return FinLattice::from_order(m, read_pairs(j.at("leq"), m));
}

json lattice_to_json(const FinLattice& l) {
  json pairs = json::array();
  for (auto [a, b] : l.strict_pairs()) pairs.push_back({a, b});
  return json{{"m", l.size()}, {"leq", pairs}};
}

json to_json(const SpaceProperties& p) {
  return json{{"t0", p.t0},
              {"t1", p.t1},
              {"hausdorff", p.hausdorff},
              {"compact", p.compact},
              {"noetherian", p.noetherian},
              {"locally_compact", p.locally_compact},
              {"core_compact", p.core_compact},
              {"sober", p.sober},
              {"well_filtered", p.well_filtered},
              {"monotone_convergence", p.monotone_convergence},
              {"coherent", p.coherent},
              {"weakly_coherent", p.weakly_coherent},
              {"weakly_hausdorff", p.weakly_hausdorff},
              {"locally_strongly_sober", p.locally_strongly_sober},
              {"stably_locally_compact", p.stably_locally_compact},
              {"strongly_sober_presumptive", p.strongly_sober_presumptive}};
}

json to_json(const FrameReport& r) {
  return json{{"is_frame", r.is_frame},
              {"is_boolean", r.is_boolean},
              {"distributivity_witness", opt_triple(r.distributivity_witness)},
              {"uncomplemented", r.uncomplemented ? json(*r.uncomplemented) : json(nullptr)}};
}

json to_json(const Filter& f) {
  return json{{"members", element_list(f.members)},
              {"proper", f.proper},
              {"scott_open", f.scott_open},
              {"completely_prime", f.completely_prime}};
}

json to_json(const TemperanceReport& r) {
  json w = nullptr;
  if (r.witness) w = json::array({r.witness->first, r.witness->second});
  return json{{"is_frame", r.is_frame},
              {"locally_temperate", r.locally_temperate},
              {"temperate", r.temperate},
              {"witness", w},
              {"note", r.note}};
}

json to_json(const WayBelowReport& r) {
  json rel = json::array();
  for (const ElementSet& s : r.waybelow) rel.push_back(element_list(s));
  return json{{"waybelow", rel},
              {"waybelow_equals_leq", r.waybelow_equals_leq},
              {"continuous", r.continuous},
              {"stable", r.stable},
              {"locally_temperate", r.locally_temperate},
              {"stable_iff_locally_temperate", r.stable_iff_locally_temperate},
              {"stability_witness", opt_triple(r.stability_witness)}};
}

json stone_json(const DualityReport& r) {
  return json{{"unit_lands_in_points", r.unit_lands_in_points},
              {"unit_injective", r.unit_injective},
              {"unit_surjective", r.unit_surjective},
              {"unit_continuous", r.unit_continuous},
              {"unit_open_map", r.unit_open_map},
              {"unit_homeomorphism", r.unit_homeomorphism},
              {"spatial", r.spatial},
              {"witnesses", r.witnesses}};
}

json hofmann_mislove_json(const DualityReport& r) {
  return json{{"hm_bijection", r.hm_bijection},
              {"hm_order_reversing", r.hm_order_reversing},
              {"scott_open_filter_count", r.scott_open_filter_count},
              {"compact_saturated_count", r.compact_saturated_count},
              {"warnings", r.warnings},
              {"witnesses", r.witnesses}};
}

json to_json(const HyperspaceReport& r) {
  return json{{"lens_count", r.lens_count},
              {"quasi_lens_count", r.quasi_lens_count},
              {"iota_injective", r.iota_injective},
              {"iota_surjective", r.iota_surjective},
              {"iota_homeomorphism", r.iota_homeomorphism},
              {"rho_iota_identity", r.rho_iota_identity},
              {"iota_rho_identity", r.iota_rho_identity},
              {"box_preimages_match", r.box_preimages_match},
              {"diamond_preimages_match", r.diamond_preimages_match},
              {"tem_equals_em", r.tem_equals_em},
              {"tem_equals_vietoris_specialization", r.tem_equals_vietoris_specialization},
              {"all_downsets_closed", r.all_downsets_closed},
              {"witnesses", r.witnesses}};
}

json to_json(const std::vector<Lens>& ls) {
  json out = json::array();
  for (const Lens& l : ls) out.push_back(point_list(l.members));
  return out;
}

json to_json(const std::vector<QuasiLens>& qs) {
  json out = json::array();
  for (const QuasiLens& q : qs) out.push_back(json{{"q", point_list(q.q)}, {"c", point_list(q.c)}});
  return out;
}

json to_json(const CounterexampleReport& r) {
  json checks = json::array();
  for (const NamedCheck& c : r.checks) {
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return json{{"all_passed", r.all_passed()}, {"checks", checks}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace topolens
