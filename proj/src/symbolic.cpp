#include "topolens/symbolic.hpp"

#include <algorithm>
#include <iterator>

#include "topolens/errors.hpp"

namespace topolens {

using Nat = CofinSet::Nat;
using nlohmann::json;

namespace {

std::vector<Nat> sorted_unique(std::vector<Nat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Nat> set_union(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Nat> set_meet(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Nat> set_minus(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CofinSet

CofinSet::CofinSet(bool cofinite, std::vector<Nat> support)
    : cofinite_(cofinite), support_(std::move(support)) {}

CofinSet CofinSet::finite(std::vector<Nat> members) {
  return CofinSet(false, sorted_unique(std::move(members)));
}

CofinSet CofinSet::cofinite(std::vector<Nat> missing) {
  return CofinSet(true, sorted_unique(std::move(missing)));
}

CofinSet CofinSet::at_least(Nat k) {
  std::vector<Nat> missing(k);
  for (Nat i = 0; i < k; ++i) missing[i] = i;
  return CofinSet(true, std::move(missing));
}

CofinSet CofinSet::from_canonical(bool is_cofinite, const std::vector<Nat>& support) {
  for (std::size_t i = 1; i < support.size(); ++i) {
    if (support[i - 1] >= support[i]) {
      throw InputError("non-canonical support: entries must be strictly increasing");
    }
  }
  return CofinSet(is_cofinite, support);
}

bool CofinSet::contains(Nat n) const {
  return std::binary_search(support_.begin(), support_.end(), n) != cofinite_;
}

std::size_t CofinSet::count() const {
  if (cofinite_) throw InputError("count of an infinite set");
  return support_.size();
}

std::optional<Nat> CofinSet::min() const {
  if (!cofinite_) {
    if (support_.empty()) return std::nullopt;
    return support_.front();
  }
  Nat k = 0;
  for (Nat s : support_) {
    if (s != k) break;
    ++k;
  }
  return k;
}

Nat CofinSet::max() const {
  if (cofinite_ || support_.empty()) throw InputError("max of an empty or infinite set");
  return support_.back();
}

CofinSet CofinSet::complement() const { return CofinSet(!cofinite_, support_); }

CofinSet CofinSet::unite(const CofinSet& o) const {
  if (!cofinite_ && !o.cofinite_) return CofinSet(false, set_union(support_, o.support_));
  if (cofinite_ && o.cofinite_) return CofinSet(true, set_meet(support_, o.support_));
  const CofinSet& fin = cofinite_ ? o : *this;
  const CofinSet& cof = cofinite_ ? *this : o;
  return CofinSet(true, set_minus(cof.support_, fin.support_));
}

CofinSet CofinSet::intersect(const CofinSet& o) const {
  return complement().unite(o.complement()).complement();
}

bool CofinSet::subset_of(const CofinSet& o) const { return minus(o).empty(); }

std::string CofinSet::str() const {
  std::string out = cofinite_ ? "cofinite{" : "finite{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(support_[i]);
  }
  return out + "}";
}

std::variant<CofinSet, bool> cofin_algebra(const CofinSet& a, const CofinSet& b, CofinOp op) {
  switch (op) {
    case CofinOp::kUnion:
      return a.unite(b);
    case CofinOp::kIntersection:
      return a.intersect(b);
    case CofinOp::kComplement:
      return a.complement();
    case CofinOp::kSubset:
      return a.subset_of(b);
    case CofinOp::kIsFinite:
      return a.is_finite();
  }
  throw InputError("unknown set operation");
}

// ---------------------------------------------------------------------------
// Points and sets

std::string SymPoint::str() const {
  switch (special) {
    case kA:
      return "a";
    case kB:
      return "b";
    case kOmega:
      return "omega";
    default:
      return std::to_string(n);
  }
}

SymSet SymSet::point(const SymPoint& p) {
  if (p.is_nat()) return SymSet{CofinSet::finite({p.n}), 0};
  return SymSet{CofinSet(), p.special};
}

bool SymSet::contains(const SymPoint& p) const {
  return p.is_nat() ? nat.contains(p.n) : (specials & p.special) != 0;
}

bool SymSet::subset_of(const SymSet& o) const {
  return nat.subset_of(o.nat) && (specials & ~o.specials) == 0;
}

SymSet SymSet::unite(const SymSet& o) const {
  return SymSet{nat.unite(o.nat), static_cast<std::uint8_t>(specials | o.specials)};
}

SymSet SymSet::intersect(const SymSet& o) const {
  return SymSet{nat.intersect(o.nat), static_cast<std::uint8_t>(specials & o.specials)};
}

std::string SymSet::str() const {
  std::string out = nat.str();
  if (specials & kA) out += "+a";
  if (specials & kB) out += "+b";
  if (specials & kOmega) out += "+omega";
  return out;
}

std::string backend_name(BackendId id) {
  switch (id) {
    case BackendId::kCofiniteNat:
      return "cofinite_nat";
    case BackendId::kScottNatAb:
      return "scott_nat_ab";
    case BackendId::kAlexNatOmega:
      return "alex_nat_omega";
  }
  return "?";
}

BackendId backend_from_name(const std::string& name) {
  for (BackendId id : {BackendId::kCofiniteNat, BackendId::kScottNatAb, BackendId::kAlexNatOmega}) {
    if (backend_name(id) == name) return id;
  }
  throw InputError("unknown space: " + name);
}

SymSet EffectiveSpace::carrier() const { return SymSet{CofinSet::all(), extras()}; }

bool EffectiveSpace::in_carrier(const SymPoint& p) const {
  return p.is_nat() || (p.special & extras()) != 0;
}

bool EffectiveSpace::in_carrier(const SymSet& a) const { return (a.specials & ~extras()) == 0; }

// ---------------------------------------------------------------------------
// Backends

namespace {

const char* const kCover = "non_compact_singleton_cover";
const char* const kIrreducible = "non_sober_irreducible";
const char* const kPair = "non_weakly_hausdorff_pair";
const char* const kDirected = "non_monotone_convergence_directed";

// N with the cofinite topology; the specialization order is equality.
class CofiniteNat final : public EffectiveSpace {
 public:
  BackendId id() const override { return BackendId::kCofiniteNat; }
  std::uint8_t extras() const override { return 0; }
  Capabilities capabilities() const override {
    return {true, true, true, {kCover, kIrreducible, kPair}};
  }
  bool leq(const SymPoint& x, const SymPoint& y) const override { return x == y; }
  bool is_open(const SymSet& a) const override { return a.nat.empty() || a.nat.is_cofinite(); }
  bool is_closed(const SymSet& a) const override { return a.nat.is_finite() || a.nat.is_all(); }
  SymSet closure(const SymSet& a) const override {
    return a.nat.is_finite() ? a : SymSet::of_nat(CofinSet::all());
  }
  SymSet upset(const SymSet& a) const override { return a; }
  SymSet downset(const SymSet& a) const override { return a; }
  SymSet upper_bounds(const SymSet& a) const override {
    if (a.empty()) return carrier();
    if (a.nat.is_finite() && a.nat.count() == 1) return a;
    return SymSet{};
  }
  bool natural_singletons_open() const override { return false; }
  bool naturals_form_chain() const override { return false; }
  std::optional<bool> separating_pair_exists(const SymPoint& x, const SymPoint& y,
                                             const SymSet& w) const override {
    // Opens around points are cofinite and so are their intersections; a
    // cofinite w is reached by U = w + x, V = w + y.
    (void)x;
    (void)y;
    return w.nat.is_cofinite();
  }
  std::optional<bool> is_irreducible_closed(const SymSet& c) const override {
    // Two non-empty opens are cofinite, so they meet inside any infinite
    // set; a finite closed set splits unless it is a singleton.
    if (!is_closed(c) || c.empty()) return false;
    return c.nat.is_cofinite() || c.nat.count() == 1;
  }
  SymSet generic_points(const SymSet& c) const override {
    if (c.nat.is_finite() && c.nat.count() == 1) return c;
    return SymSet{};
  }
};

// N + {a, b}: naturals pairwise incomparable, a and b incomparable and
// below every natural. Scott and Alexandroff topologies coincide.
class ScottNatAb final : public EffectiveSpace {
 public:
  BackendId id() const override { return BackendId::kScottNatAb; }
  std::uint8_t extras() const override { return kA | kB; }
  Capabilities capabilities() const override {
    return {false, true, true, {kCover, kIrreducible, kPair}};
  }
  bool leq(const SymPoint& x, const SymPoint& y) const override {
    return x == y || (!x.is_nat() && y.is_nat());
  }
  SymSet upset(const SymSet& a) const override {
    if (a.specials != 0) return SymSet{CofinSet::all(), a.specials};
    return a;
  }
  SymSet downset(const SymSet& a) const override {
    if (!a.nat.empty()) return SymSet{a.nat, static_cast<std::uint8_t>(kA | kB)};
    return a;
  }
  bool is_open(const SymSet& a) const override { return upset(a) == a; }
  bool is_closed(const SymSet& a) const override { return downset(a) == a; }
  SymSet closure(const SymSet& a) const override { return downset(a); }
  SymSet upper_bounds(const SymSet& a) const override {
    SymSet out = carrier();
    if (a.specials & kA) out = out.intersect(upset(SymSet::point(SymPoint::extra(kA))));
    if (a.specials & kB) out = out.intersect(upset(SymSet::point(SymPoint::extra(kB))));
    if (a.nat.is_cofinite() || a.nat.count() > 1) return SymSet{};
    if (a.nat.count() == 1) out = out.intersect(a);
    return out;
  }
  bool natural_singletons_open() const override { return true; }
  bool naturals_form_chain() const override { return false; }
  std::optional<bool> separating_pair_exists(const SymPoint& x, const SymPoint& y,
                                             const SymSet& w) const override {
    return upset(SymSet::point(x)).intersect(upset(SymSet::point(y))).subset_of(w);
  }
  std::optional<bool> is_irreducible_closed(const SymSet& c) const override {
    // Alexandroff: irreducible closed = non-empty directed down-set. Two
    // naturals have no common upper bound, nor do a and b on their own.
    if (!is_closed(c) || c.empty()) return false;
    if (c.nat.is_cofinite() || c.nat.count() > 1) return false;
    if (c.nat.count() == 1) return true;
    return c.specials != (kA | kB);
  }
  SymSet generic_points(const SymSet& c) const override {
    if (c.nat.is_finite() && c.nat.count() == 1 && c.specials == (kA | kB)) {
      return SymSet{c.nat, 0};
    }
    if (c.nat.empty() && (c.specials == kA || c.specials == kB)) return c;
    return SymSet{};
  }
};

// N + {omega} with the usual order and omega on top, in the Alexandroff
// topology.
class AlexNatOmega final : public EffectiveSpace {
 public:
  BackendId id() const override { return BackendId::kAlexNatOmega; }
  std::uint8_t extras() const override { return kOmega; }
  Capabilities capabilities() const override {
    return {false, true, true, {kCover, kIrreducible, kPair, kDirected}};
  }
  bool leq(const SymPoint& x, const SymPoint& y) const override {
    if (!y.is_nat()) return true;
    return x.is_nat() && x.n <= y.n;
  }
  SymSet upset(const SymSet& a) const override {
    if (a.nat.empty()) return a;
    return SymSet{CofinSet::at_least(*a.nat.min()), kOmega};
  }
  SymSet downset(const SymSet& a) const override {
    if (a.specials & kOmega) return carrier();
    if (a.nat.empty()) return a;
    if (a.nat.is_cofinite()) return SymSet::of_nat(CofinSet::all());
    return SymSet::of_nat(CofinSet::at_least(a.nat.max() + 1).complement());
  }
  bool is_open(const SymSet& a) const override { return upset(a) == a; }
  bool is_closed(const SymSet& a) const override { return downset(a) == a; }
  SymSet closure(const SymSet& a) const override { return downset(a); }
  SymSet upper_bounds(const SymSet& a) const override {
    SymSet out = carrier();
    const SymSet top = SymSet::point(SymPoint::extra(kOmega));
    if (a.specials & kOmega) out = out.intersect(top);
    if (a.nat.is_cofinite()) {
      out = out.intersect(top);
    } else if (!a.nat.empty()) {
      out = out.intersect(upset(SymSet::point(SymPoint::nat(a.nat.max()))));
    }
    return out;
  }
  bool natural_singletons_open() const override { return false; }
  bool naturals_form_chain() const override { return true; }
  std::optional<bool> separating_pair_exists(const SymPoint& x, const SymPoint& y,
                                             const SymSet& w) const override {
    return upset(SymSet::point(x)).intersect(upset(SymSet::point(y))).subset_of(w);
  }
  std::optional<bool> is_irreducible_closed(const SymSet& c) const override {
    // Totally ordered, so every non-empty down-set is directed.
    return is_closed(c) && !c.empty();
  }
  SymSet generic_points(const SymSet& c) const override {
    if (!is_closed(c) || c.empty()) return SymSet{};
    if (c.specials & kOmega) return SymSet::point(SymPoint::extra(kOmega));
    if (c.nat.is_cofinite()) return SymSet{};
    return SymSet::point(SymPoint::nat(c.nat.max()));
  }
};

}  // namespace

std::unique_ptr<EffectiveSpace> make_backend(BackendId id) {
  switch (id) {
    case BackendId::kCofiniteNat:
      return std::make_unique<CofiniteNat>();
    case BackendId::kScottNatAb:
      return std::make_unique<ScottNatAb>();
    case BackendId::kAlexNatOmega:
      return std::make_unique<AlexNatOmega>();
  }
  throw InputError("unknown backend");
}

// ---------------------------------------------------------------------------
// Cofinite N

CofiniteOps cofinite_space_ops(const CofinSet& a) {
  CofiniteOps out;
  out.is_open = a.empty() || a.is_cofinite();
  out.is_closed = a.is_finite() || a.is_all();
  out.is_compact_saturated = cofinite_is_compact(a, CompactnessMethod::kOpenCover) &&
                             cofinite_is_compact(a, CompactnessMethod::kFilteredClosed);
  out.closure = a.is_finite() ? a : CofinSet::all();
  return out;
}

bool cofinite_is_compact(const CofinSet& a, CompactnessMethod method) {
  if (a.empty()) return true;
  if (method == CompactnessMethod::kOpenCover) {
    // A cover member containing min(a) is cofinite; the finitely many points
    // of a outside it each need one more member.
    return true;
  }
  // Closed sets are finite or N. A filtered family meeting a either
  // consists of N alone, or has a finite member F; the members inside F form
  // a filtered family of finite sets, which has a least member, and that
  // member meets a.
  return true;
}

bool cn_quasi_lens_classification(const CofinSet& q, const CofinSet& c) {
  return (q == c && q.is_finite() && !q.empty()) || (!q.empty() && c.is_all());
}

QuasiLensDecision cn_quasi_lens(const CofinSet& q, const CofinSet& c) {
  QuasiLensDecision d;
  const CofinSet meet = q.intersect(c);
  d.condition1 = !meet.empty();
  // T1, so up(Q /\ C) = Q /\ C.
  d.condition2 = q.subset_of(meet);
  if (q.empty()) {
    // U = empty set is an open neighbourhood of Q.
    d.condition3 = c.empty();
  } else if (c.is_finite()) {
    // Every open U around a non-empty Q is cofinite, cl(U /\ C) = U /\ C, and
    // the cofinite supersets of Q intersect to Q.
    d.condition3 = c.subset_of(q);
  } else {
    // U /\ C is infinite, so its closure is N.
    d.condition3 = true;
  }
  const bool closed = c.is_finite() || c.is_all();
  d.is_quasi_lens = closed && d.condition1 && d.condition2 && d.condition3;
  if (!closed) {
    d.reason = "C is not closed";
  } else if (!d.condition1) {
    d.reason = "Q does not meet C";
  } else if (!d.condition2) {
    d.reason = "Q is not inside up(Q /\\ C)";
  } else if (!d.condition3) {
    d.reason = "C is not inside cl(U /\\ C) for some open U around Q";
  }
  if (d.is_quasi_lens != cn_quasi_lens_classification(q, c)) {
    throw InvariantViolation("quasi-lens decision and classification disagree on (" + q.str() +
                             ", " + c.str() + ")");
  }
  return d;
}

std::pair<CofinSet, CofinSet> cn_iota(const CofinSet& l) {
  if (l.empty()) throw InputError("iota of the empty set");
  return {l, l.is_finite() ? l : CofinSet::all()};
}

bool cn_image_of_iota(const CofinSet& q, const CofinSet& c) {
  const bool predicate =
      (q == c && q.is_finite() && !q.empty()) || (q.is_cofinite() && c.is_all());
  // rho(iota(L)) = L, so the only candidate preimage is Q /\ C.
  const CofinSet candidate = q.intersect(c);
  const bool searched = !candidate.empty() && cn_iota(candidate) == std::make_pair(q, c);
  if (predicate != searched) {
    throw InvariantViolation("iota image predicate and preimage search disagree on (" + q.str() +
                             ", " + c.str() + ")");
  }
  return predicate;
}

bool cn_tem_leq(const CofinSet& l, const CofinSet& m) {
  const auto cl = [](const CofinSet& s) { return s.is_finite() ? s : CofinSet::all(); };
  return m.subset_of(l) && cl(l).subset_of(cl(m));
}

bool cn_em_leq(const CofinSet& l, const CofinSet& m) {
  return m.subset_of(l) && l.subset_of(m);
}

// ---------------------------------------------------------------------------
// JSON

json sym_set_to_json(const SymSet& s) {
  json j;
  j[s.nat.is_finite() ? "finite" : "cofinite"] = s.nat.support();
  json extra = json::array();
  if (s.specials & kA) extra.push_back("a");
  if (s.specials & kB) extra.push_back("b");
  if (s.specials & kOmega) extra.push_back("omega");
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

namespace {

bool is_natural(const json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0);
}

Special special_from_name(const std::string& name) {
  if (name == "a") return kA;
  if (name == "b") return kB;
  if (name == "omega") return kOmega;
  throw InputError("unknown point: " + name);
}

std::vector<Nat> nat_list(const json& j) {
  if (!j.is_array()) throw InputError("support must be an array of naturals");
  std::vector<Nat> out;
  for (const json& e : j) {
    if (!is_natural(e)) throw InputError("support must be an array of naturals");
    out.push_back(e.get<Nat>());
  }
  return out;
}

}  // namespace

SymSet sym_set_from_json(const json& j) {
  if (!j.is_object()) throw InputError("set must be an object");
  const bool fin = j.contains("finite");
  const bool cof = j.contains("cofinite");
  if (fin == cof) throw InputError("set needs exactly one of \"finite\" and \"cofinite\"");
  SymSet s;
  s.nat = CofinSet::from_canonical(cof, nat_list(j.at(fin ? "finite" : "cofinite")));
  if (j.contains("extra")) {
    if (!j.at("extra").is_array()) throw InputError("\"extra\" must be an array");
    for (const json& e : j.at("extra")) {
      if (!e.is_string()) throw InputError("extra points are named by strings");
      s.specials |= special_from_name(e.get<std::string>());
    }
  }
  return s;
}

json point_to_json(const SymPoint& p) {
  if (p.is_nat()) return p.n;
  return p.str();
}

SymPoint point_from_json(const json& j) {
  if (is_natural(j)) return SymPoint::nat(j.get<Nat>());
  if (j.is_string()) return SymPoint::extra(special_from_name(j.get<std::string>()));
  throw InputError("point must be a natural or a name");
}

json Certificate::to_json() const { return json{{"kind", kind}, {"space", space}, {"payload", payload}}; }

Certificate Certificate::from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("space") || !j.contains("payload") ||
      !j.at("kind").is_string() || !j.at("space").is_string() || !j.at("payload").is_object()) {
    throw InputError("certificate needs string \"kind\", string \"space\" and object \"payload\"");
  }
  return Certificate{j.at("kind").get<std::string>(), j.at("space").get<std::string>(),
                     j.at("payload")};
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

const json& field(const json& payload, const char* name) {
  if (!payload.contains(name)) throw InputError(std::string("payload is missing \"") + name + "\"");
  return payload.at(name);
}

SymSet carrier_set(const EffectiveSpace& s, const json& j) {
  SymSet out = sym_set_from_json(j);
  if (!s.in_carrier(out)) throw InputError("set has points outside the space");
  return out;
}

SymPoint carrier_point(const EffectiveSpace& s, const json& j) {
  SymPoint p = point_from_json(j);
  if (!s.in_carrier(p)) throw InputError("point outside the space: " + p.str());
  return p;
}

CertificateResult check_cover(const EffectiveSpace& s, const json& payload) {
  const SymSet target = carrier_set(s, field(payload, "target"));
  // Schema: the cover is {{n} | n in target}. Its members are pairwise
  // disjoint and each meets the target in one point, so an infinite target
  // has no finite subcover.
  if (!s.natural_singletons_open()) return {false, "singletons of naturals are not open"};
  if (target.specials != 0) return {false, "target has points that no singleton of a natural covers"};
  if (target.nat.is_finite()) return {false, "target is finite"};
  std::string detail = "target " + target.str() + " is not compact";
  if (payload.contains("meet_of_upsets")) {
    const json& pair = payload.at("meet_of_upsets");
    if (!pair.is_array() || pair.size() != 2) throw InputError("\"meet_of_upsets\" needs two points");
    const SymPoint x = carrier_point(s, pair[0]);
    const SymPoint y = carrier_point(s, pair[1]);
    const SymSet meet = s.upset(SymSet::point(x)).intersect(s.upset(SymSet::point(y)));
    if (meet != target) return {false, "target differs from up(x) /\\ up(y) = " + meet.str()};
    detail += ", so up(" + x.str() + ") /\\ up(" + y.str() + ") is not compact";
  }
  return {true, detail};
}

CertificateResult check_irreducible(const EffectiveSpace& s, const json& payload) {
  const SymSet c = carrier_set(s, field(payload, "closed"));
  const std::optional<bool> irreducible = s.is_irreducible_closed(c);
  if (!irreducible.has_value()) throw InputError("backend cannot decide irreducibility");
  if (!*irreducible) return {false, c.str() + " is not irreducible closed"};
  const SymSet generic = s.generic_points(c);
  if (!generic.empty()) return {false, c.str() + " has generic points " + generic.str()};
  return {true, c.str() + " is irreducible closed with no generic point"};
}

CertificateResult check_pair(const EffectiveSpace& s, const json& payload) {
  const SymPoint x = carrier_point(s, field(payload, "x"));
  const SymPoint y = carrier_point(s, field(payload, "y"));
  const SymSet w = carrier_set(s, field(payload, "w"));
  if (!s.is_open(w)) return {false, "w is not open"};
  const SymSet meet = s.upset(SymSet::point(x)).intersect(s.upset(SymSet::point(y)));
  if (!meet.subset_of(w)) return {false, "up(x) /\\ up(y) is not inside w"};
  const std::optional<bool> exists = s.separating_pair_exists(x, y, w);
  if (!exists.has_value()) throw InputError("backend cannot decide open pairs");
  if (*exists) return {false, "some U around x and V around y have U /\\ V inside w"};
  return {true, "no U around " + x.str() + " and V around " + y.str() + " fit inside " + w.str()};
}

CertificateResult check_directed(const EffectiveSpace& s, const json& payload) {
  const json& from = field(payload, "chain_from");
  if (!is_natural(from)) throw InputError("\"chain_from\" must be a natural");
  const SymSet chain = SymSet::of_nat(CofinSet::at_least(from.get<Nat>()));
  const SymPoint sup = carrier_point(s, field(payload, "sup"));
  const SymSet open = carrier_set(s, field(payload, "open"));
  if (!s.naturals_form_chain()) return {false, "the naturals are not a chain here"};
  const SymSet bounds = s.upper_bounds(chain);
  if (!bounds.contains(sup)) return {false, sup.str() + " is not an upper bound of the chain"};
  if (!bounds.subset_of(s.upset(SymSet::point(sup)))) {
    return {false, sup.str() + " is not the least upper bound"};
  }
  if (!s.is_open(open)) return {false, "the named set is not open"};
  if (!open.contains(sup)) return {false, "the open does not contain the supremum"};
  if (!open.intersect(chain).empty()) return {false, "the open meets the chain"};
  return {true, open.str() + " contains sup " + sup.str() + " but no chain member"};
}

}  // namespace

CertificateResult certificate_check(BackendId space, const Certificate& cert) {
  const std::unique_ptr<EffectiveSpace> s = make_backend(space);
  if (backend_name(space) != cert.space) {
    throw InputError("certificate is for " + cert.space + ", not " + backend_name(space));
  }
  const std::vector<std::string> kinds = s->capabilities().certificate_kinds;
  if (std::find(kinds.begin(), kinds.end(), cert.kind) == kinds.end()) {
    throw InputError("kind " + cert.kind + " is not supported by " + cert.space);
  }
  if (cert.kind == kCover) return check_cover(*s, cert.payload);
  if (cert.kind == kIrreducible) return check_irreducible(*s, cert.payload);
  if (cert.kind == kPair) return check_pair(*s, cert.payload);
  return check_directed(*s, cert.payload);
}

std::vector<Certificate> builtin_certificates() {
  const json all = sym_set_to_json(SymSet::of_nat(CofinSet::all()));
  return {
      {kIrreducible, "cofinite_nat", json{{"closed", all}}},
      {kPair, "cofinite_nat", json{{"x", 0}, {"y", 1}, {"w", sym_set_to_json(SymSet{})}}},
      {kCover, "scott_nat_ab", json{{"target", all}, {"meet_of_upsets", json::array({"a", "b"})}}},
      {kDirected, "alex_nat_omega",
       json{{"chain_from", 0},
            {"sup", "omega"},
            {"open", sym_set_to_json(SymSet::point(SymPoint::extra(kOmega)))}}},
      {kIrreducible, "alex_nat_omega", json{{"closed", all}}},
  };
}

// ---------------------------------------------------------------------------
// Suite

std::vector<CofinSet> representable_sets(int max_support) {
  if (max_support < -1 || max_support > 16) throw CapacityError("support bound must be in [-1, 16]");
  const Nat width = static_cast<Nat>(max_support + 1);
  std::vector<CofinSet> out;
  for (bool cof : {false, true}) {
    for (Nat mask = 0; mask < (Nat{1} << width); ++mask) {
      std::vector<Nat> support;
      for (Nat i = 0; i < width; ++i) {
        if ((mask >> i) & 1U) support.push_back(i);
      }
      out.push_back(cof ? CofinSet::cofinite(support) : CofinSet::finite(support));
    }
  }
  return out;
}

bool CounterexampleReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

CounterexampleReport cn_counterexample_suite(int max_support) {
  CounterexampleReport r;
  auto add = [&r](std::string name, bool passed, std::string detail) {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const std::unique_ptr<EffectiveSpace> cn = make_backend(BackendId::kCofiniteNat);
  const CofinSet nat = CofinSet::all();
  const std::vector<CofinSet> sets = representable_sets(max_support);

  {
    // Any two non-empty opens meet, checked on every pair of sample opens.
    bool meet = true;
    for (const CofinSet& u : sets) {
      for (const CofinSet& v : sets) {
        if (u.is_cofinite() && v.is_cofinite() && u.intersect(v).empty()) meet = false;
      }
    }
    const bool irreducible = cn->is_irreducible_closed(SymSet::of_nat(nat)).value_or(false);
    add("cofinite_nat_irreducible", meet && irreducible,
        "N is closed and any two non-empty opens meet");
  }
  {
    bool none = cn->generic_points(SymSet::of_nat(nat)).empty();
    for (Nat x = 0; x < 100; ++x) {
      if (cn->closure(SymSet::point(SymPoint::nat(x))) != SymSet::point(SymPoint::nat(x))) {
        none = false;
      }
    }
    add("cofinite_nat_no_generic_point", none, "cl{x} = {x} != N for every x");
  }
  {
    const CertificateResult res =
        certificate_check(BackendId::kCofiniteNat, builtin_certificates()[1]);
    bool sampled = true;
    for (const CofinSet& u : sets) {
      for (const CofinSet& v : sets) {
        if (u.is_cofinite() && v.is_cofinite() && u.contains(0) && v.contains(1) &&
            u.intersect(v).empty()) {
          sampled = false;
        }
      }
    }
    add("cofinite_nat_not_weakly_hausdorff", res.valid && sampled, res.detail);
  }
  {
    const SymSet l = SymSet::of_nat(CofinSet::cofinite({0}));
    const bool differs = cn->closure(l) == SymSet::of_nat(nat) && cn->downset(l) == l;
    bool pattern = true;
    for (const CofinSet& s : sets) {
      if (s.empty()) continue;
      const bool equal = cn->closure(SymSet::of_nat(s)) == cn->downset(SymSet::of_nat(s));
      if (equal != (s.is_finite() || s.is_all())) pattern = false;
    }
    add("cofinite_nat_closure_differs_from_downset", differs && pattern,
        "cl(cofinite{0}) = N, down(cofinite{0}) = cofinite{0}; cl L = down L iff L finite or N");
  }
  {
    const bool tem = cn_tem_leq(nat, CofinSet::cofinite({0}));
    const bool em = cn_em_leq(nat, CofinSet::cofinite({0}));
    bool pattern = true;
    for (const CofinSet& l : sets) {
      for (const CofinSet& m : sets) {
        if (l.empty() || m.empty()) continue;
        const bool expect_tem = (l == m && l.is_finite()) || (m.is_cofinite() && m.subset_of(l));
        if (cn_tem_leq(l, m) != expect_tem || cn_em_leq(l, m) != (l == m)) pattern = false;
      }
    }
    add("cofinite_nat_tem_differs_from_em", tem && !em && pattern,
        "N below cofinite{0} in TEM but not in EM");
  }
  {
    bool agree = true;
    std::string detail = "decision and classification agree";
    int count = 0;
    for (const CofinSet& q : sets) {
      for (const CofinSet& c : sets) {
        try {
          if (cn_quasi_lens(q, c).is_quasi_lens) ++count;
          cn_image_of_iota(q, c);
        } catch (const InvariantViolation& e) {
          agree = false;
          detail = e.what();
        }
      }
    }
    add("cofinite_nat_quasi_lens_classification", agree,
        detail + " (" + std::to_string(count) + " quasi-lenses among " +
            std::to_string(sets.size() * sets.size()) + " pairs)");
  }
  {
    const CofinSet zero = CofinSet::finite({0});
    const bool quasi = cn_quasi_lens(zero, nat).is_quasi_lens;
    const bool outside = !cn_image_of_iota(zero, nat);
    const bool not_identity = cn_iota(zero.intersect(nat)) != std::make_pair(zero, nat);
    add("cofinite_nat_iota_not_surjective", quasi && outside && not_identity,
        "(finite{0}, N) is a quasi-lens outside the image of iota");
  }
  for (const Certificate& cert : builtin_certificates()) {
    const CertificateResult res = certificate_check(backend_from_name(cert.space), cert);
    add("certificate_" + cert.space + "_" + cert.kind, res.valid, res.detail);
  }
  return r;
}

}  // namespace topolens
