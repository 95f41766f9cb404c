#include "hyperfact/hyperbola.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hyperfact {

HyperbolaParams::HyperbolaParams(Int n_) : n(std::move(n_)) {
  if (n < 2) throw std::domain_error("HyperbolaParams: n must be >= 2");
}

bool on_curve(const HyperbolaParams& params, const Rat& x, const Rat& y) {
  return y * y == x * x - 4 * params.n * x;
}

HyperbolaPoint::HyperbolaPoint(const HyperbolaParams& params, Rat x_, Rat y_)
    : x(std::move(x_)), y(std::move(y_)) {
  if (!on_curve(params, x, y)) {
    std::ostringstream msg;
    msg << "HyperbolaPoint: (" << rat_str(x) << ", " << rat_str(y)
        << ") is not on B_" << params.n;
    throw std::invalid_argument(msg.str());
  }
}

HyperbolaPoint add(const HyperbolaParams& params, const HyperbolaPoint& p,
                   const HyperbolaPoint& q) {
  const Rat two_n(2 * params.n);
  const Rat u = p.x - two_n, v = q.x - two_n;
  Rat x = (u * v + p.y * q.y) / two_n + two_n;
  Rat y = (p.y * v + q.y * u) / two_n;
  x.canonicalize();
  y.canonicalize();
  return HyperbolaPoint(params, x, y);
}

HyperbolaPoint identity_point(const HyperbolaParams& params) {
  return HyperbolaPoint(params, Rat(4 * params.n), Rat(0));
}

FivePointSet five_points(const Int& p_in, const Int& q_in) {
  Int p = p_in, q = q_in;
  if (p == q) throw std::domain_error("five_points: p = q is unsupported");
  if (p < q) std::swap(p, q);  // p > q keeps every y-coordinate nonnegative
  if (q < 3 || mpz_even_p(p.get_mpz_t()) || mpz_even_p(q.get_mpz_t()))
    throw std::domain_error("five_points: factors must be distinct odd primes");
  if (!is_prime(p) || !is_prime(q))
    throw std::domain_error("five_points: factors must be distinct odd primes");

  const Int n = p * q;
  const HyperbolaParams params(n);
  HyperbolaPoint p0(params, Rat(4 * n), Rat(0));
  HyperbolaPoint p1(params, Rat((p + q) * (p + q)), Rat(p * p - q * q));
  // x-ascending: p(q+1)^2 < q(p+1)^2 whenever p > q.
  HyperbolaPoint p2(params, Rat(p * (q + 1) * (q + 1)), Rat(p * (q * q - 1)));
  HyperbolaPoint p3(params, Rat(q * (p + 1) * (p + 1)), Rat(q * (p * p - 1)));
  HyperbolaPoint p4(params, Rat((n + 1) * (n + 1)), Rat(n * n - 1));
  return FivePointSet{p0, p1, p2, p3, p4};
}

std::vector<HyperbolaPoint> enumerate_integral_points(const HyperbolaParams& params) {
  const Int& n = params.n;
  const Int target = 4 * n * n;
  std::vector<HyperbolaPoint> points;
  for (const Int& d : divisors(target)) {
    const Int v = target / d;
    if (mpz_odd_p(d.get_mpz_t()) || mpz_odd_p(v.get_mpz_t())) continue;
    // u = d, w = v: x - 2n = (u+w)/2, y = (w-u)/2; the negated pair gives
    // the branch left of the origin.
    points.emplace_back(params, Rat(2 * n + (d + v) / 2), Rat((v - d) / 2));
    points.emplace_back(params, Rat(2 * n - (d + v) / 2), Rat((d - v) / 2));
  }
  std::sort(points.begin(), points.end());
  return points;
}

namespace {

enum class FactorShape { kPrimePower, kTwoDistinctPrimes };

struct ShapeInfo {
  FactorShape shape;
  unsigned alpha = 0;  // for prime powers
};

ShapeInfo classify(const Int& n) {
  const auto fac = factorize(n);
  if (fac.size() == 1) return {FactorShape::kPrimePower, fac[0].exponent};
  if (fac.size() == 2 && fac[0].exponent == 1 && fac[1].exponent == 1)
    return {FactorShape::kTwoDistinctPrimes, 0};
  throw std::domain_error(
      "cardinality: no closed form for n with more than two prime factors");
}

}  // namespace

Int cardinality_region(const HyperbolaParams& params) {
  const ShapeInfo info = classify(params.n);
  if (info.shape == FactorShape::kPrimePower) return Int(info.alpha + 1);
  return Int(5);
}

Int cardinality_total(const HyperbolaParams& params) {
  const ShapeInfo info = classify(params.n);
  if (info.shape == FactorShape::kPrimePower) return Int(4 * info.alpha + 2);
  return Int(18);
}

std::vector<HyperbolaPoint> symmetry_orbit(const HyperbolaParams& params,
                                           const HyperbolaPoint& p) {
  const Rat mx = Rat(4 * params.n) - p.x;
  std::vector<HyperbolaPoint> orbit;
  orbit.emplace_back(params, p.x, p.y);
  orbit.emplace_back(params, p.x, -p.y);
  orbit.emplace_back(params, mx, p.y);
  orbit.emplace_back(params, mx, -p.y);
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

Report structure_checks(const HyperbolaParams& params) {
  Report report;
  const auto points = enumerate_integral_points(params);
  const Int total(static_cast<unsigned long>(points.size()));

  auto push = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  push("cardinality-parity", mpz_even_p(total.get_mpz_t()) != 0,
       "total = " + total.get_str());

  const ShapeInfo info = classify(params.n);
  if (info.shape == FactorShape::kTwoDistinctPrimes) {
    push("semiprime-total-18", total == 18, "total = " + total.get_str());
    push("total-factors-2-9", total == Int(2) * 9, "18 = 2^1 * 3^2");
    const auto v3 = p_adic_valuation(Int(3), total);
    push("three-adic-valuation", v3.has_value() && *v3 == 2,
         v3 ? "v_3 = " + std::to_string(*v3) : "v_3 = infinity");
  } else {
    const Int expected(4 * info.alpha + 2);
    push("prime-power-total", total == expected,
         "total = " + total.get_str() + ", expected " + expected.get_str());
  }

  const HyperbolaPoint origin(params, Rat(0), Rat(0));
  const HyperbolaPoint doubled = add(params, origin, origin);
  push("origin-doubling", doubled == identity_point(params),
       "2*(0,0) = (" + rat_str(doubled.x) + ", " + rat_str(doubled.y) + ")");
  return report;
}

}  // namespace hyperfact
