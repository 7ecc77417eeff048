// topolens: command-line front end.
//
// Exit status: 0 all checks pass, 1 a property check failed (a witness is in
// the report), 2 the input could not be used.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "topolens/dot.hpp"
#include "topolens/errors.hpp"
#include "topolens/frames.hpp"
#include "topolens/io.hpp"
#include "topolens/powerdomain.hpp"
#include "topolens/properties.hpp"
#include "topolens/suite.hpp"
#include "topolens/symbolic.hpp"

using nlohmann::json;
using namespace topolens;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  std::vector<std::string> checks;
  std::string what = "lenses";
  SuiteConfig suite;
  std::vector<std::string> suites;
  std::string certificate;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

enum class InputKind { kSpace, kLattice };

struct Loaded {
  InputKind kind = InputKind::kSpace;
  FinSpace space;
  FinLattice lattice;
};

Loaded load(const std::string& path) {
  const json j = parse_json(read_file(path));
  Loaded l;
  if (j.is_object() && j.contains("m")) {
    l.kind = InputKind::kLattice;
    l.lattice = lattice_from_json(j);
  } else if (j.is_object() && j.contains("leq")) {
    l.space = alexandroff_space(preorder_from_json(j, j.value("strict", false)));
  } else {
    l.space = space_from_json(j);
  }
  return l;
}

std::string lattice_dot(const FinLattice& l) {
  std::vector<std::string> labels;
  for (int a = 0; a < l.size(); ++a) labels.push_back(std::to_string(a));
  return hasse_dot("lattice", labels, [&](int a, int b) { return l.leq(a, b); });
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end() ||
         std::find(v.begin(), v.end(), "all") != v.end();
}

int check_space(const Options& o, const FinSpace& s) {
  const std::vector<std::string> checks =
      o.checks.empty() ? std::vector<std::string>{"properties"} : o.checks;
  if (o.format == "dot") {
    emit(o, has(checks, "quasi-lenses") ? quasi_lens_dot(s) : lens_order_dot(s));
    return kExitPass;
  }
  json report{{"schema_version", kSchemaVersion}, {"input", "space"}, {"space", space_to_json(s)}};
  bool ok = true;
  if (has(checks, "properties")) {
    const SpaceProperties p = property_report(s);
    const std::vector<std::string> broken = law_violations(p);
    report["properties"] = to_json(p);
    report["law_violations"] = broken;
    ok = ok && broken.empty();
  }
  if (has(checks, "frame")) {
    const OpenLattice ol = lattice_of_opens(s);
    report["frame"] = to_json(frame_report(ol.lattice));
    report["temperance"] = to_json(temperance_report(ol.lattice));
  }
  if (has(checks, "hyperspace")) {
    const HyperspaceReport r = check_embedding(s);
    report["hyperspace"] = to_json(r);
    const LemmaCheck lc = lemma_hypothesis_check(s);
    report["lemma_hypothesis_holds"] = lc.holds;
    ok = ok && r.all_hold() && lc.holds;
  }
  if (has(checks, "duality")) {
    const DualityReport st = stone_round_trip(s);
    const DualityReport hm = hofmann_mislove_report(s);
    report["stone"] = stone_json(st);
    report["hofmann_mislove"] = hofmann_mislove_json(hm);
    ok = ok && st.spatial && hm.hm_bijection && hm.hm_order_reversing;
  }
  report["passed"] = ok;
  emit(o, dump(report));
  return ok ? kExitPass : kExitFail;
}

int check_lattice(const Options& o, const FinLattice& l) {
  if (o.format == "dot") {
    emit(o, lattice_dot(l));
    return kExitPass;
  }
  const std::vector<std::string> checks =
      o.checks.empty() ? std::vector<std::string>{"frame"} : o.checks;
  json report{{"schema_version", kSchemaVersion}, {"input", "lattice"}, {"lattice", lattice_to_json(l)}};
  bool ok = true;
  if (has(checks, "frame")) report["frame"] = to_json(frame_report(l));
  if (has(checks, "temperance")) report["temperance"] = to_json(temperance_report(l));
  if (has(checks, "waybelow")) {
    const WayBelowReport r = waybelow_and_stability(l);
    report["waybelow"] = to_json(r);
    ok = ok && r.waybelow_equals_leq && r.stable_iff_locally_temperate;
  }
  report["passed"] = ok;
  emit(o, dump(report));
  return ok ? kExitPass : kExitFail;
}

int cmd_check(const Options& o) {
  const Loaded in = load(o.input);
  return in.kind == InputKind::kLattice ? check_lattice(o, in.lattice) : check_space(o, in.space);
}

int cmd_enumerate(const Options& o) {
  const Loaded in = load(o.input);
  json out{{"schema_version", kSchemaVersion}, {"what", o.what}};
  if (o.what == "filters" || o.what == "cp-filters") {
    const FinLattice l = in.kind == InputKind::kLattice ? in.lattice : lattice_of_opens(in.space).lattice;
    json list = json::array();
    const FilterKind kind = o.what == "filters" ? FilterKind::kAll : FilterKind::kCompletelyPrime;
    for (const Filter& f : filters_of(l, kind)) list.push_back(to_json(f));
    out["filters"] = list;
    emit(o, dump(out));
    return kExitPass;
  }
  if (in.kind == InputKind::kLattice) throw InputError(o.what + " needs a space input");
  const FinSpace& s = in.space;
  if (o.format == "dot") {
    if (o.what == "lenses") emit(o, lens_order_dot(s));
    else if (o.what == "quasi-lenses") emit(o, quasi_lens_dot(s));
    else throw InputError("DOT output is available for lenses and quasi-lenses");
    return kExitPass;
  }
  if (o.what == "lenses") {
    out["lenses"] = to_json(lenses(s));
  } else if (o.what == "quasi-lenses") {
    out["quasi_lenses"] = to_json(quasi_lenses(s));
  } else if (o.what == "irreducible") {
    json list = json::array();
    for (const IrreducibleClosed& c : irreducible_closed_sets(s)) {
      list.push_back(json{{"set", point_list(c.set)}, {"generic_points", point_list(c.generic_points)}});
    }
    out["irreducible_closed"] = list;
  } else if (o.what == "compact-saturated") {
    json list = json::array();
    for (PointSet q : compact_saturated_sets(s)) list.push_back(point_list(q));
    out["compact_saturated"] = list;
  } else {
    throw InputError("unknown enumeration: " + o.what);
  }
  emit(o, dump(out));
  return kExitPass;
}

int cmd_duality(const Options& o) {
  const Loaded in = load(o.input);
  json out{{"schema_version", kSchemaVersion}};
  if (in.kind == InputKind::kLattice) {
    const PointsSpace pt = points_space(in.lattice);
    out["points"] = space_to_json(pt.space);
    out["spatial"] = stone_round_trip(pt.space).spatial;
    emit(o, dump(out));
    return kExitPass;
  }
  const DualityReport st = stone_round_trip(in.space);
  const DualityReport hm = hofmann_mislove_report(in.space);
  out["stone"] = stone_json(st);
  out["hofmann_mislove"] = hofmann_mislove_json(hm);
  const bool ok = st.spatial && hm.hm_bijection && hm.hm_order_reversing;
  out["passed"] = ok;
  emit(o, dump(out));
  return ok ? kExitPass : kExitFail;
}

int cmd_examples(const Options& o) {
  if (!o.certificate.empty()) {
    const Certificate cert = Certificate::from_json(parse_json(read_file(o.certificate)));
    const CertificateResult r = certificate_check(backend_from_name(cert.space), cert);
    emit(o, dump(json{{"schema_version", kSchemaVersion},
                      {"certificate", cert.to_json()},
                      {"valid", r.valid},
                      {"detail", r.detail}}));
    return r.valid ? kExitPass : kExitFail;
  }
  const CounterexampleReport r = cn_counterexample_suite();
  json certs = json::array();
  for (const Certificate& c : builtin_certificates()) certs.push_back(c.to_json());
  json out = to_json(r);
  out["schema_version"] = kSchemaVersion;
  out["certificates"] = certs;
  emit(o, dump(out));
  return r.all_passed() ? kExitPass : kExitFail;
}

int cmd_suite(Options o) {
  o.suite.suites = std::set<std::string>(o.suites.begin(), o.suites.end());
  validate(o.suite);
  if (o.suite.max_points == kOptInPointCap) {
    std::cerr << "warning: the 5-point sweep covers 6942 spaces per suite and takes minutes\n";
  }
  const SuiteResult r = run_suite(o.suite);
  emit(o, dump(r.report));
  return r.passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for finite spaces, finite frames and hyperspaces"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  };

  CLI::App* check = app.add_subcommand("check", "Run checkers on a space, preorder or lattice file");
  check->add_option("input", o.input)->required();
  check->add_option("--checks", o.checks,
                    "properties, frame, hyperspace, duality, quasi-lenses (dot), temperance, "
                    "waybelow, all")
      ->delimiter(',');
  add_common(check);

  CLI::App* suite = app.add_subcommand("suite", "Run the theorem suites");
  suite->add_option("--seed", o.suite.seed);
  suite->add_option("--max-points", o.suite.max_points, "Exhaustive sweep size (default 4)");
  suite->add_option("--samples", o.suite.samples, "Random space count");
  suite->add_option("--suites", o.suites, "spaces, frames, powerdomain, lattices, examples, all")
      ->delimiter(',');
  suite->add_flag("--allow-five", o.suite.allow_five, "Permit --max-points 5");
  suite->add_flag("--timing", o.suite.timing, "Record elapsed time in the report");
  add_common(suite);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List lenses, quasi-lenses, filters, ...");
  enumerate->add_option("input", o.input)->required();
  enumerate->add_option("--what", o.what,
                        "lenses, quasi-lenses, filters, cp-filters, irreducible, compact-saturated");
  add_common(enumerate);

  CLI::App* duality = app.add_subcommand("duality", "Stone and Hofmann-Mislove round trips");
  duality->add_option("input", o.input)->required();
  add_common(duality);

  CLI::App* examples = app.add_subcommand("examples", "Symbolic counterexamples and certificates");
  examples->add_option("--certificate", o.certificate, "Check one certificate file");
  add_common(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*check) return cmd_check(o);
    if (*suite) return cmd_suite(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*duality) return cmd_duality(o);
    return cmd_examples(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapacityError& e) {
    std::cerr << "input too large: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitFail;
  }
}
