#pragma once

#include <compare>
#include <vector>

#include "hyperfact/exact.hpp"
#include "hyperfact/report.hpp"

namespace hyperfact {

// The hyperbola B_n: y^2 = x^2 - 4nx over the rationals, together with its
// abelian group structure and the finite set of integral points.

struct HyperbolaParams {
  Int n;
  explicit HyperbolaParams(Int n_);  // requires n >= 2
};

bool on_curve(const HyperbolaParams& params, const Rat& x, const Rat& y);

// A rational point, validated against the curve equation on construction.
struct HyperbolaPoint {
  Rat x, y;
  HyperbolaPoint(const HyperbolaParams& params, Rat x_, Rat y_);

  bool is_integral() const { return x.get_den() == 1 && y.get_den() == 1; }

  friend bool operator==(const HyperbolaPoint& a, const HyperbolaPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const HyperbolaPoint& a, const HyperbolaPoint& b) {
    const int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return cmp(a.y, b.y) < 0;
  }
};

// Group law with identity (4n, 0):
//   x_{P+Q} = [(x_P - 2n)(x_Q - 2n) + y_P y_Q] / 2n + 2n
//   y_{P+Q} = [y_P (x_Q - 2n) + y_Q (x_P - 2n)] / 2n
HyperbolaPoint add(const HyperbolaParams& params, const HyperbolaPoint& p,
                   const HyperbolaPoint& q);

HyperbolaPoint identity_point(const HyperbolaParams& params);

// The five integral points with x >= 4n, y >= 0 for a semiprime n = p*q.
// Canonical labeling: x_{P2} < x_{P3}.
struct FivePointSet {
  HyperbolaPoint p0, p1, p2, p3, p4;
};

// p, q distinct odd primes; throws std::domain_error otherwise.
FivePointSet five_points(const Int& p, const Int& q);

// Complete set of integral points, via divisor pairs of 4n^2 in the
// factored identity (x - 2n - y)(x - 2n + y) = 4n^2. Sorted by (x, y).
std::vector<HyperbolaPoint> enumerate_integral_points(const HyperbolaParams& params);

// Closed-form counts; require n to be a prime power or a product of two
// distinct primes (std::domain_error otherwise).
Int cardinality_region(const HyperbolaParams& params);  // x >= 4n, y >= 0
Int cardinality_total(const HyperbolaParams& params);

// Orbit of P under (x, y) -> (x, -y) and (x, y) -> (4n - x, y).
std::vector<HyperbolaPoint> symmetry_orbit(const HyperbolaParams& params,
                                           const HyperbolaPoint& p);

// Group-classification facts restated as machine checks: parity of the
// total count, the 18 = 2 * 3^2 decomposition with v_3 = 2 for semiprimes,
// and the doubling 2*(0,0) = (4n, 0).
Report structure_checks(const HyperbolaParams& params);

}  // namespace hyperfact
