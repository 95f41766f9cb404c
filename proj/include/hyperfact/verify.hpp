#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperfact/report.hpp"

namespace hyperfact {

// Batch verification of the library's algebraic invariants over desk-scale
// ranges, exposed to the CLI `verify` subcommand.

struct VerifyOptions {
  std::uint64_t semiprimes_to = 300;    // odd semiprimes n = p*q < bound
  std::uint64_t prime_powers_to = 300;  // p^alpha < bound
  std::uint64_t scan_to = 100;          // brute-force enumeration cross-check
  std::uint64_t discriminant_to = 100;  // D(n) = 0 for 2 <= n <= bound
  std::uint64_t system_to = 300;
  std::uint64_t factor_to = 2000;
  std::uint64_t gamma_to = 300;
  std::vector<std::uint64_t> chain_moduli = {15, 21, 35, 77, 5959};
  unsigned chain_samples = 20;  // random points per modulus
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct VerifySuiteResult {
  std::string suite;
  std::uint64_t checks_run = 0;
  std::vector<CheckResult> failures;
  std::vector<std::string> notes;  // e.g. gamma counterexample reports
  bool pass() const { return failures.empty(); }
};

std::vector<VerifySuiteResult> run_verify(const VerifyOptions& opts);

}  // namespace hyperfact
