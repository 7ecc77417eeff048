#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "topolens/space.hpp"

namespace topolens {

/// A finite or cofinite subset of the naturals. The representation is
/// unique for each extension: `support` is the set itself when finite and
/// its complement when cofinite, sorted without repeats.
class CofinSet {
 public:
  using Nat = std::uint64_t;

  CofinSet() = default;
  static CofinSet finite(std::vector<Nat> members);
  static CofinSet cofinite(std::vector<Nat> missing);
  static CofinSet empty_set() { return CofinSet(); }
  static CofinSet all() { return cofinite({}); }
  /// {n | n >= k}.
  static CofinSet at_least(Nat k);
  /// Rejects unsorted or repeated supports instead of normalizing them.
  static CofinSet from_canonical(bool is_cofinite, const std::vector<Nat>& support);

  bool is_finite() const { return !cofinite_; }
  bool is_cofinite() const { return cofinite_; }
  const std::vector<Nat>& support() const { return support_; }
  bool empty() const { return !cofinite_ && support_.empty(); }
  bool is_all() const { return cofinite_ && support_.empty(); }
  bool contains(Nat n) const;
  /// Number of members; only for finite sets.
  std::size_t count() const;
  /// Least member, or nullopt when empty.
  std::optional<Nat> min() const;
  /// Greatest member of a non-empty finite set.
  Nat max() const;

  CofinSet complement() const;
  CofinSet unite(const CofinSet& o) const;
  CofinSet intersect(const CofinSet& o) const;
  CofinSet minus(const CofinSet& o) const { return intersect(o.complement()); }
  bool subset_of(const CofinSet& o) const;

  std::string str() const;
  bool operator==(const CofinSet&) const = default;

 private:
  CofinSet(bool cofinite, std::vector<Nat> support);

  bool cofinite_ = false;
  std::vector<Nat> support_;
};

enum class CofinOp { kUnion, kIntersection, kComplement, kSubset, kIsFinite };

/// One entry point for the set algebra; boolean ops return the second
/// alternative. `b` is ignored by unary ops.
std::variant<CofinSet, bool> cofin_algebra(const CofinSet& a, const CofinSet& b, CofinOp op);

/// Extra points of the two dcpo examples.
enum Special : std::uint8_t { kNone = 0, kA = 1, kB = 2, kOmega = 4 };

/// A natural number or one of the extra points.
struct SymPoint {
  Special special = kNone;
  CofinSet::Nat n = 0;

  static SymPoint nat(CofinSet::Nat k) { return SymPoint{kNone, k}; }
  static SymPoint extra(Special s) { return SymPoint{s, 0}; }
  bool is_nat() const { return special == kNone; }
  std::string str() const;
  bool operator==(const SymPoint&) const = default;
};

/// A representable subset of a backend carrier: naturals plus extra points.
struct SymSet {
  CofinSet nat;
  std::uint8_t specials = 0;

  static SymSet of_nat(CofinSet s) { return SymSet{std::move(s), 0}; }
  static SymSet point(const SymPoint& p);
  bool empty() const { return nat.empty() && specials == 0; }
  bool contains(const SymPoint& p) const;
  bool subset_of(const SymSet& o) const;
  SymSet unite(const SymSet& o) const;
  SymSet intersect(const SymSet& o) const;
  std::string str() const;
  bool operator==(const SymSet&) const = default;
};

enum class BackendId { kCofiniteNat, kScottNatAb, kAlexNatOmega };

std::string backend_name(BackendId id);
/// Throws InputError on unknown names.
BackendId backend_from_name(const std::string& name);

struct Capabilities {
  bool decides_compactness = false;
  bool decides_irreducibility = false;
  bool decides_weak_hausdorff_pairs = false;
  std::vector<std::string> certificate_kinds;
};

/// An infinite space over representable sets. `extras` lists the special
/// points present; hull operators are exact on every representable input.
class EffectiveSpace {
 public:
  virtual ~EffectiveSpace() = default;

  virtual BackendId id() const = 0;
  virtual std::uint8_t extras() const = 0;
  virtual Capabilities capabilities() const = 0;

  /// The declared order of the example.
  virtual bool leq(const SymPoint& x, const SymPoint& y) const = 0;
  virtual bool is_open(const SymSet& a) const = 0;
  virtual bool is_closed(const SymSet& a) const = 0;
  virtual SymSet closure(const SymSet& a) const = 0;
  virtual SymSet upset(const SymSet& a) const = 0;
  virtual SymSet downset(const SymSet& a) const = 0;
  /// Common upper bounds of every member of `a`.
  virtual SymSet upper_bounds(const SymSet& a) const = 0;

  /// Every {n} is open.
  virtual bool natural_singletons_open() const = 0;
  /// The declared order restricted to the naturals is the usual one.
  virtual bool naturals_form_chain() const = 0;
  /// Whether some open U containing x and V containing y have U /\ V
  /// inside the open w; nullopt when the backend cannot decide.
  virtual std::optional<bool> separating_pair_exists(const SymPoint& x, const SymPoint& y,
                                                     const SymSet& w) const = 0;
  /// Closed, non-empty, and meeting U /\ V whenever it meets opens U and V;
  /// nullopt when undecidable.
  virtual std::optional<bool> is_irreducible_closed(const SymSet& c) const = 0;
  /// {x | cl{x} = c}, which is finite for every backend here.
  virtual SymSet generic_points(const SymSet& c) const = 0;

  SymSet carrier() const;
  bool in_carrier(const SymPoint& p) const;
  bool in_carrier(const SymSet& a) const;
};

std::unique_ptr<EffectiveSpace> make_backend(BackendId id);

struct CofiniteOps {
  bool is_open = false;
  bool is_closed = false;
  bool is_compact_saturated = false;
  CofinSet closure;
};

CofiniteOps cofinite_space_ops(const CofinSet& a);

/// Compactness in cofinite N by either method. An open cover has a
/// cofinite member, leaving finitely many points to cover; a filtered family
/// of closed sets either is all of N or has a finite member, below which it
/// stabilizes.
bool cofinite_is_compact(const CofinSet& a, CompactnessMethod method);

struct QuasiLensDecision {
  bool is_quasi_lens = false;
  bool condition1 = false;
  bool condition2 = false;
  bool condition3 = false;
  std::string reason;
};

/// Decides the three quasi-lens conditions on cofinite N and compares with
/// the closed-form classification; throws InvariantViolation on mismatch.
QuasiLensDecision cn_quasi_lens(const CofinSet& q, const CofinSet& c);
/// (Q = C finite non-empty) or (Q non-empty and C = N).
bool cn_quasi_lens_classification(const CofinSet& q, const CofinSet& c);

/// (L, cl L). Throws InputError on the empty set.
std::pair<CofinSet, CofinSet> cn_iota(const CofinSet& l);
/// (Q = C finite non-empty) or (Q infinite and C = N), checked against the
/// only possible preimage Q /\ C; throws InvariantViolation on mismatch.
bool cn_image_of_iota(const CofinSet& q, const CofinSet& c);

/// Topological Egli-Milner and Egli-Milner orders on lenses of cofinite N.
bool cn_tem_leq(const CofinSet& l, const CofinSet& m);
bool cn_em_leq(const CofinSet& l, const CofinSet& m);

struct Certificate {
  std::string kind;
  std::string space;
  nlohmann::json payload;

  nlohmann::json to_json() const;
  /// Throws InputError when fields are missing or mistyped.
  static Certificate from_json(const nlohmann::json& j);
};

struct CertificateResult {
  bool valid = false;
  std::string detail;
};

/// Throws InputError on malformed payloads or kinds the backend does not
/// support.
CertificateResult certificate_check(BackendId space, const Certificate& cert);

/// The certificates for the three example spaces.
std::vector<Certificate> builtin_certificates();

nlohmann::json sym_set_to_json(const SymSet& s);
SymSet sym_set_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const SymPoint& p);
SymPoint point_from_json(const nlohmann::json& j);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CounterexampleReport {
  std::vector<NamedCheck> checks;
  bool all_passed() const;
};

/// The cofinite-N counterexamples, the quasi-lens and image sweeps over
/// supports inside {0..max_support}, and every built-in certificate.
CounterexampleReport cn_counterexample_suite(int max_support = 6);

/// Every finite and cofinite set with support inside {0..max_support}.
std::vector<CofinSet> representable_sets(int max_support);

}  // namespace topolens
