#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>

#include "hyperfact/exact.hpp"

namespace hyperfact {

// Reference factorers used for cross-validation and benchmarking.

// Smallest prime factor and cofactor; empty when n is prime. n >= 2.
std::optional<std::pair<Int, Int>> trial_division(const Int& n);

struct FermatResult {
  Int p, q;  // p <= q, p*q = n (not necessarily prime)
  Int s;     // certifying sum p + q
};

// Scans s upward from ceil(2*sqrt(n)) until s^2 - 4n is a perfect square,
// i.e. balanced splits first - intentionally the opposite direction of the
// epsilon search. Requires odd n; empty when no nontrivial split exists.
std::optional<FermatResult> fermat(const Int& n);

struct BaselineReport {
  Int n, p, q;
  std::uint64_t iterations = 0;
  std::chrono::nanoseconds elapsed{0};
};

std::optional<BaselineReport> trial_division_report(const Int& n);
std::optional<BaselineReport> fermat_report(const Int& n);

}  // namespace hyperfact
