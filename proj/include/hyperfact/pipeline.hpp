#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "hyperfact/curves.hpp"
#include "hyperfact/epsilon.hpp"
#include "hyperfact/exact.hpp"
#include "hyperfact/hyperbola.hpp"

namespace hyperfact {

// End-to-end factorization: the bilinear system solved by {P2, P3}, the
// h / h^-1 maps between the point pair and (hyper_x, hyper_y), and the
// four-step backward walk E_k -> E_w -> J_Q -> R_n -> {P2, P3}.

struct SystemInstance {
  Int N;
  Int X1, Y1, X2, Y2;

  Int a() const { return 2 * N * (N * N + 1); }
  Int b() const { return 2 * N * (N * N - 1); }

  // X1 = x_{P2} - 2N, Y1 = y_{P2}, X2 = x_{P3} - 2N, Y2 = y_{P3}.
  // Requires integral points.
  static SystemInstance from_points(const HyperbolaParams& params,
                                    const HyperbolaPoint& p2,
                                    const HyperbolaPoint& p3);
};

bool verify_system(const SystemInstance& inst);

// The closed forms X1 = (bY2 - aX2)/(Y2^2 - X2^2), Y1 = (bX2 - aY2)/(X2^2 - Y2^2);
// empty when X2^2 = Y2^2.
std::optional<Rat> corollary_x1(const SystemInstance& inst);
std::optional<Rat> corollary_y1(const SystemInstance& inst);

// h: {P2, P3} -> (x_{P2} + x_{P3}, x_{P2} * x_{P3}).
std::pair<Rat, Rat> h_map(const HyperbolaPoint& p2, const HyperbolaPoint& p3);

// Integer roots of t^2 - Xt + Y, ascending; empty when the discriminant is
// negative, not a perfect square, or the roots are non-integral.
std::optional<std::pair<Int, Int>> h_inv(const Int& x_sum, const Int& y_prod);

struct FactorResult {
  Int p, q;            // 1 < p <= q < n, p*q = n
  std::string method;  // "epsilon" or "chain"
  std::variant<EpsilonProfile, ChainTrace> certificate;
};

enum class ChainOutcome {
  kFactored,
  kAtInfinity,      // start or intermediate point left the affine charts
  kTwoTorsion,      // hit the y = 0 fiber where J^-1 is undefined
  kNotIntegral,     // recovered (X, Y) not integers
  kNotPositive,     // recovered (X, Y) integral but not strictly positive
  kNoIntegerRoots,  // t^2 - Xt + Y has no integer roots
  kTrivialGcd,      // every gcd in the fallback ladder was 1 or n
};

std::string outcome_name(ChainOutcome o);

struct PipelineResult {
  ChainOutcome outcome;
  std::optional<FactorResult> factors;
  std::optional<std::pair<Int, Int>> hyperbola_roots;  // {x_{P2}, x_{P3}}
  std::optional<std::pair<Int, Int>> gcds;
};

// K^-1, J^-1, I^-1 in sequence; accepts only integral positive (X, Y),
// then h^-1 and gcd extraction. Rejections are typed, not errors.
PipelineResult backward_pipeline(const Int& n, const EkPoint& start);

enum class FactorStrategy { kEpsilon, kChain };

// Requires n >= 15, odd, composite (std::domain_error otherwise). The
// result is cross-validated against trial division for n < 10^6. The
// epsilon search budget defaults to n/2, which covers every valid epsilon.
std::optional<FactorResult> factor(
    const Int& n, FactorStrategy strategy = FactorStrategy::kEpsilon,
    const std::optional<Int>& eps_budget = std::nullopt);

}  // namespace hyperfact
