#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "uhsl2/element.hpp"

namespace uhsl2 {

struct OracleSweepReport {
  std::size_t pairs = 0;
  std::size_t coefficients = 0;  // nonzero coefficients compared
  std::size_t mismatch_count = 0;
  std::size_t integrality_violations = 0;
  // The first few offending pairs, for diagnostics.
  std::vector<std::pair<NormalMonomial, NormalMonomial>> mismatches;

  bool ok() const { return mismatch_count == 0 && integrality_violations == 0; }
};

/// Compares mono_star_mono against oracle_star on every pair of monomials
/// whose eight exponents are all <= max_exp, and checks that every oracle
/// coefficient is an integer. `threads` = 0 picks the hardware concurrency.
OracleSweepReport oracle_sweep(unsigned max_exp, unsigned threads = 0);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Closed forms of the worked products, in the divided basis.
Element expected_z_times_x2();   // z * x^2/2!
Element expected_z2_times_x2();  // z^2/2! * x^2/2!

/// The fixed catalog of relations, worked products and symbol identities,
/// each evaluated through every independent path available.
std::vector<CheckResult> identity_catalog();

}  // namespace uhsl2
