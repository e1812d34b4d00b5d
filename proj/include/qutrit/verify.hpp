#pragma once

// The reproduction suite: every structural identity of the construction as
// a named pass/fail check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qutrit/gates.hpp"

namespace qutrit {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string details;
  double elapsed_seconds = 0.0;
};

struct VerifyOptions {
  /// Runs only checks whose id starts with this prefix.
  std::string filter;
  std::uint64_t seed = 20240917;
  std::size_t level_gap_samples = 100000;
  std::size_t roundtrip_samples = 1000;
};

/// Check ids in execution order.
const std::vector<std::string>& check_ids();

/// Runs the selected checks against `catalog`. Exceptions inside a check are
/// reported as failures.
std::vector<CheckResult> run_all(const Catalog& catalog, const VerifyOptions& options = {});
inline std::vector<CheckResult> run_all(const VerifyOptions& options = {}) {
  return run_all(Catalog::standard(), options);
}

bool all_passed(const std::vector<CheckResult>& results);

/// One line per check: "PASS id (1.23 s): details".
std::string format_text(const std::vector<CheckResult>& results);
std::string format_json(const std::vector<CheckResult>& results, const VerifyOptions& options);

/// Random gate word: length uniform in 1..max_length, each token H with
/// probability 1/2 and otherwise a uniformly random element of D.
GateWord random_word(std::mt19937_64& rng, int max_length = 40);

/// The embedding table: epsilon_i(conj(eta) eta) for eta = u1, u2, pi, pi^2
/// and i = 1, 2, 3, row-major.
std::vector<double> unit_embedding_table();
/// The reference values, three significant digits.
const std::vector<double>& unit_embedding_reference();
/// x rounded to three significant digits equals reference.
bool matches_three_digits(double x, double reference);

}  // namespace qutrit
