#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "topolens/lattice.hpp"
#include "topolens/space.hpp"

namespace topolens {

/// Exhaustive sweeps stop at 4 points unless 5 is opted into.
inline constexpr int kDefaultPointCap = 4;
inline constexpr int kOptInPointCap = 5;

struct SuiteConfig {
  std::uint64_t seed = 1;
  int max_points = kDefaultPointCap;
  /// Random spaces on 6 to 8 points for the space laws; a fifth as many
  /// 6-point spaces for duality and hyperspaces, a tenth as many random
  /// distributive lattices.
  int samples = 1000;
  /// Subset of suite_names(); empty or {"all"} runs everything.
  std::set<std::string> suites;
  bool allow_five = false;
  /// Adds elapsed wall-clock time, which makes reports differ run to run.
  bool timing = false;
};

std::vector<std::string> suite_names();

/// Throws InputError on unknown suites or a point cap above what is allowed.
void validate(const SuiteConfig& config);

struct SuiteResult {
  nlohmann::json report;
  bool passed = false;
};

SuiteResult run_suite(const SuiteConfig& config);

/// Half partial orders, half general preorders, with a random density.
FinSpace random_space(int n, std::mt19937_64& rng);

/// Down-set lattice of a random poset, relabelled at random and rebuilt
/// from its order pairs. At most `max_m` elements.
FinLattice random_distributive_lattice(int max_m, std::mt19937_64& rng);

/// {"n": n, "subbasis": minimal neighbourhoods}: loads back as the same
/// space.
nlohmann::json replay_form(const FinSpace& space);

}  // namespace topolens
