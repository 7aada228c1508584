#pragma once

// Reference implementations for testing: classical values of finitary
// names, a direct exponential reading of the inductive definitions of <=
// and <, a seeded random name generator, and batteries of order and
// arithmetic laws.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ordinal/names.hpp"

namespace ordinal::oracle {

/// val(Zero) = 0, val(node) = max of val(child) + 1. Finitary names only.
std::uint64_t val(const Name& a);

/// a <= bs: every subordinal of a is < bs.
bool naive_le(const Name& a, std::span<const Name> bs);
/// a < bs: a <= the union of some selection of subordinals of bs, not all
/// empty. All selections are tried. Finitary names only.
bool naive_lt(const Name& a, std::span<const Name> bs);
void clear_naive_memo();

struct GenParams {
  std::uint32_t max_depth = 4;
  std::uint32_t max_width = 3;
  /// Chance of splicing w, 1 + w or w + w in place of a subtree.
  double omega_probability = 0.0;
  std::uint64_t seed = 0;
};

/// A fresh generator seeded from p.seed.
Name gen_name(const GenParams& p);
/// Draws from an existing generator; p.seed is ignored.
Name gen_name(const GenParams& p, std::mt19937_64& rng);

// -- Law batteries -------------------------------------------------------------

struct LawResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// First failing instance, names printed as expressions.
  std::string counterexample;
};

struct BatteryOptions {
  std::uint64_t seed = 0;
  std::uint64_t cases = 1000;
  std::uint32_t max_depth = 4;
  std::uint32_t max_width = 3;
};

struct BatteryReport {
  std::vector<LawResult> laws;

  bool ok() const;
  std::uint64_t checks() const;
  std::uint64_t passed() const;
  /// The first failing law, or nullptr.
  const LawResult* first_failure() const;
};

/// Axioms 1-15 of an F-order and the facts derived from them.
BatteryReport order_battery(const BatteryOptions& opts);
/// Addition, multiplication and sequential sums; value homomorphism.
BatteryReport arith_battery(const BatteryOptions& opts);
/// Both of the above.
BatteryReport full_battery(const BatteryOptions& opts);

}  // namespace ordinal::oracle
