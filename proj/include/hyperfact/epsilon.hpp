#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperfact/exact.hpp"
#include "hyperfact/report.hpp"

namespace hyperfact {

// The epsilon parameterization: k = (p+1)(q+1) = 2(n - epsilon), so
// epsilon = (n - 1 - (p+q)) / 2 for an odd semiprime n = p*q.

struct EpsilonProfile {
  Int n;
  Int epsilon;
  Int k;        // 2(n - epsilon)
  Int sum_pq;   // n - 1 - 2*epsilon
  Int phi;      // 2(epsilon + 1), the totient of n at the true epsilon
  Int hyper_x;  // k(n+1) - (n-1)^2 = x_{P2} + x_{P3}
  Int hyper_y;  // k^2 * n        = x_{P2} * x_{P3}

  static EpsilonProfile from_epsilon(const Int& n, const Int& epsilon);
  static EpsilonProfile from_factors(const Int& p, const Int& q);
};

// (hyper_x, hyper_y) for a candidate epsilon, 0 < epsilon < n.
std::pair<Int, Int> hyper_roots_from_epsilon(const Int& n, const Int& epsilon);

Int epsilon_from_factors(const Int& p, const Int& q);

// f1(i) = 4i^2 + 4(1-n)i + n^2 - 6n + 1; equals (p-q)^2 at the true epsilon
// and (n-1)^2 at i = n.
Int f1(const Int& n, const Int& i);

// f2(i) = 4(n^2-2n+1)i^2 + 4(3n^2-n^3-3n+1)i + n^4-8n^3+14n^2-8n+1.
Int f2(const Int& n, const Int& i);

enum class GammaSource { kF1, kF2, kBoth };

struct GammaMember {
  Int i;
  GammaSource source;
};

struct GammaScanResult {
  Int n;
  Int i_max;
  std::vector<GammaMember> members;  // ascending
  std::optional<Int> epsilon1, epsilon2;
  bool conjecture_holds = false;  // members == {eps1, eps2, n} with the
                                  // stated sum and product relations
};

// Exhaustive scan of 1..i_max for perfect-square values of f1 or f2.
// Negative values are never squares. Counterexamples to the expected
// three-member shape are reported via conjecture_holds = false, never
// suppressed. Deterministic for any worker count.
GammaScanResult gamma_scan(const Int& n, const Int& i_max, unsigned workers = 1);

// Requires eps1 + eps2 = n - 1. Checks the paired-roots identities:
// X_{e1} + X_{e2} = 8n, X_{e1} - X_{e2} = 2(n+1)(e2-e1),
// phi_{e1} + phi_{e2} = 2(n+1), phi_{e1} * phi_{e2} = 4(e1*e2 + n).
Report check_epsilon_lemma(const Int& n, const Int& eps1, const Int& eps2);

struct EpsilonFactorResult {
  Int p, q;     // p >= q, p*q = n
  Int epsilon;  // certifying epsilon
};

// Ascending epsilon search: s = n - 1 - 2*eps, accept when s^2 - 4n is a
// positive perfect square. Equivalent to scanning p+q downward from n-1,
// so the most unbalanced factorization is found first.
std::optional<EpsilonFactorResult> epsilon_factor(const Int& n, const Int& eps_budget,
                                                  unsigned workers = 1);
std::optional<EpsilonFactorResult> epsilon_factor(const Int& n);  // budget n/2

}  // namespace hyperfact
