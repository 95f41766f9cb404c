#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperfact {

// Arbitrary-precision signed integer. Everything in this library is exact;
// there is no floating point anywhere.
using Int = mpz_class;

// Exact rational, always kept in canonical form (lowest terms, positive
// denominator). Use make_rat to build one from a num/den pair.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// "num/den", or just "num" when den == 1.
std::string rat_str(const Rat& q);

// floor(sqrt(m)); throws std::domain_error for m < 0.
Int isqrt(const Int& m);

// sqrt(m) when m is a nonnegative perfect square, empty otherwise.
std::optional<Int> is_perfect_square(const Int& m);

// 64-bit fast paths, used in inner search loops. Integer-only Newton plus
// quadratic-residue filters; exact for the full uint64_t range.
std::uint64_t isqrt_u64(std::uint64_t m);
bool is_square_u64(std::uint64_t m);

// Nonnegative gcd; gcd(0, 0) == 0.
Int gcd(const Int& a, const Int& b);

// Largest k with p^k | m. Empty optional encodes v_p(0) = infinity.
// Throws std::domain_error when p is not prime.
std::optional<unsigned long> p_adic_valuation(const Int& p, const Int& m);

// Deterministic Miller-Rabin over the 12-witness set (valid far past 64
// bits); plain trial division beyond that bound, which is desk scale here.
bool is_prime(const Int& n);

struct PrimePower {
  Int prime;
  unsigned exponent;
};

// Trial-division factorization, n >= 1. Intended for desk-scale n.
std::vector<PrimePower> factorize(Int n);

// All positive divisors of n, ascending.
std::vector<Int> divisors(const Int& n);

// Exact determinant of a square integer matrix (fraction-free Bareiss).
Int determinant(std::vector<std::vector<Int>> m);

// Sieve-backed range helpers for the verification drivers.
struct OddSemiprime {
  std::uint64_t n, p, q;  // n = p*q, 2 < p < q, both prime
};
std::vector<OddSemiprime> odd_semiprimes_below(std::uint64_t bound);

struct PrimePowerValue {
  std::uint64_t n, p;
  unsigned alpha;  // n = p^alpha, alpha >= 1
};
std::vector<PrimePowerValue> prime_powers_below(std::uint64_t bound);

}  // namespace hyperfact
