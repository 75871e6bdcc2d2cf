#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catalan/moments.hpp"

namespace catalan {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  MomentOptions moments;
  /// Largest genus for which full mu_1 tables are cross-checked.
  int fullMomentGenusLimit = 8;
  unsigned crossOrderLimit = 6;
  /// Primes below this bound are counted two ways and checked against Weil.
  std::uint64_t pointCountBound = 2000;
  /// Split primes below pointCountBound checked against Jacobi sums.
  std::size_t jacobiPrimeLimit = 5;
};

/// Runs the structural, moment, classification and point-count invariants for
/// one curve. Each check records its own failure instead of throwing.
std::vector<CheckResult> runInvariantSuite(const CatalanParams &params, const VerifyOptions &options = {},
                                           const std::function<void(const CheckResult &)> &onResult = {});

} // namespace catalan
