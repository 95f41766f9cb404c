#include <doctest.h>

#include <functional>
#include <random>

#include "hyperfact/exact.hpp"

using namespace hyperfact;

namespace {

// Brute-force floor sqrt; the independent oracle for small inputs.
Int isqrt_oracle(const Int& m) {
  Int r = 0;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

Int gcd_oracle(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TEST_CASE("isqrt matches brute force and frozen values") {
  CHECK(isqrt(Int(10)) == 3);
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(784)) == 28);  // 28^2 = 784 by direct multiplication
  for (int m = 0; m <= 3000; ++m) CHECK(isqrt(Int(m)) == isqrt_oracle(Int(m)));
  CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt bracketing property on random big integers") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Int m(rng());
    m = m * m + Int(rng() % 1000);  // push past 64 bits
    const Int r = isqrt(m);
    CHECK(r * r <= m);
    CHECK((r + 1) * (r + 1) > m);
  }
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(Int(4)) == Int(2));
  CHECK_FALSE(is_perfect_square(Int(-24)).has_value());
  CHECK(is_perfect_square(Int(35344)) == Int(188));
  CHECK(is_perfect_square(Int(0)) == Int(0));
  for (int m = 0; m <= 2000; ++m) {
    const Int r = isqrt_oracle(Int(m));
    const bool square = r * r == m;
    CHECK(is_perfect_square(Int(m)).has_value() == square);
    CHECK((is_perfect_square(Int(m)).has_value() == (isqrt(Int(m)) * isqrt(Int(m)) == m)));
  }
}

TEST_CASE("64-bit fast paths agree with the exact versions") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t m = rng();
    CHECK(Int(isqrt_u64(m)) == isqrt(Int(m)));
    CHECK(is_square_u64(m) == is_perfect_square(Int(m)).has_value());
  }
  for (std::uint64_t r = 0; r < 2000; ++r) {
    CHECK(is_square_u64(r * r));
    CHECK(isqrt_u64(r * r) == r);
  }
  CHECK(isqrt_u64(~0ull) == 4294967295ull);
}

TEST_CASE("gcd frozen values and divisibility properties") {
  CHECK(gcd(Int(80), Int(15)) == 5);
  CHECK(gcd(Int(0), Int(7)) == 7);
  CHECK(gcd(Int(108), Int(15)) == 3);
  CHECK(gcd(Int(0), Int(0)) == 0);
  CHECK(gcd(Int(-12), Int(18)) == 6);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const Int a(static_cast<long>(rng() % 2000000) - 1000000);
    const Int b(static_cast<long>(rng() % 2000000) - 1000000);
    const Int g = gcd(a, b);
    CHECK(g == gcd_oracle(a, b));
    if (g != 0) {
      CHECK(a % g == 0);
      CHECK(b % g == 0);
    }
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(p_adic_valuation(Int(5), Int(75)) == 2ul);
  CHECK(p_adic_valuation(Int(3), Int(75)) == 1ul);
  CHECK_FALSE(p_adic_valuation(Int(7), Int(0)).has_value());  // infinity
  CHECK(p_adic_valuation(Int(2), Int(-40)) == 3ul);
  CHECK(p_adic_valuation(Int(2), Int(75)) == 0ul);
  CHECK_THROWS_AS(p_adic_valuation(Int(6), Int(12)), std::domain_error);
}

TEST_CASE("rational canonical form") {
  const Rat q = make_rat(Int(6), Int(-8));
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 4);
  CHECK(make_rat(Int(0), Int(5)) == 0);
  CHECK(make_rat(Int(0), Int(5)).get_den() == 1);
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::domain_error);
  CHECK(rat_str(make_rat(Int(10), Int(4))) == "5/2");
  CHECK(rat_str(make_rat(Int(8), Int(4))) == "2");

  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Int num(static_cast<long>(rng() % 100000) - 50000);
    const Int den(static_cast<long>(rng() % 9999) + 1);
    const Rat r = make_rat(num, den);
    CHECK(r.get_den() > 0);
    CHECK(gcd(Int(r.get_num()), Int(r.get_den())) <= 1);
    CHECK(r * den == num);
  }
}

TEST_CASE("is_prime agrees with trial division") {
  auto slow_prime = [](unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (unsigned long n = 0; n < 5000; ++n)
    CHECK(is_prime(Int(n)) == slow_prime(n));
  CHECK(is_prime(Int("2305843009213693951")));   // 2^61 - 1
  CHECK_FALSE(is_prime(Int("2305843009213693953")));
  CHECK(is_prime(Int(5959) / 59) );
}

TEST_CASE("factorize and divisors") {
  const auto f = factorize(Int(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0].prime == 2);
  CHECK(f[0].exponent == 3);
  CHECK(f[1].prime == 3);
  CHECK(f[1].exponent == 2);
  CHECK(f[2].prime == 5);
  CHECK(f[2].exponent == 1);
  CHECK(factorize(Int(1)).empty());

  const auto ds = divisors(Int(36));
  CHECK(ds == std::vector<Int>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Int n(rng() % 100000 + 1);
    Int back = 1;
    for (const auto& [p, e] : factorize(n))
      for (unsigned k = 0; k < e; ++k) back *= p;
    CHECK(back == n);
  }
}

TEST_CASE("determinant (Bareiss) against cofactor expansion") {
  // Laplace-expansion oracle, exponential but fine for small matrices.
  std::function<Int(const std::vector<std::vector<Int>>&)> laplace =
      [&](const std::vector<std::vector<Int>>& m) -> Int {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Int>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<Int> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(m[i][k]);
        minor.push_back(std::move(row));
      }
      const Int term = m[0][j] * laplace(minor);
      total += (j % 2 == 0) ? term : Int(-term);
    }
    return total;
  };

  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (auto& row : m)
      for (auto& v : row) v = Int(static_cast<long>(rng() % 41) - 20);
    CHECK(determinant(m) == laplace(m));
  }

  // zero leading pivots force the row-swap path
  CHECK(determinant({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
  CHECK(determinant({{Int(0), Int(2), Int(1)},
                     {Int(1), Int(0), Int(3)},
                     {Int(2), Int(1), Int(0)}}) == 13);
  const std::vector<std::vector<Int>> hollow = {
      {Int(0), Int(1), Int(2), Int(3)},
      {Int(1), Int(0), Int(4), Int(5)},
      {Int(2), Int(4), Int(0), Int(6)},
      {Int(3), Int(5), Int(6), Int(0)}};
  CHECK(determinant(hollow) == laplace(hollow));
  CHECK(determinant({{Int(0), Int(0)}, {Int(0), Int(5)}}) == 0);
  CHECK(determinant({{Int(3)}}) == 3);
}

TEST_CASE("sieve range helpers") {
  const auto semis = odd_semiprimes_below(50);
  std::vector<std::uint64_t> ns;
  for (const auto& s : semis) ns.push_back(s.n);
  CHECK(ns == std::vector<std::uint64_t>{15, 21, 33, 35, 39});
  for (const auto& s : semis) {
    CHECK(s.p * s.q == s.n);
    CHECK(s.p < s.q);
    CHECK(is_prime(Int(s.p)));
    CHECK(is_prime(Int(s.q)));
  }

  const auto powers = prime_powers_below(30);
  std::vector<std::uint64_t> pn;
  for (const auto& p : powers) pn.push_back(p.n);
  CHECK(pn == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19,
                                         23, 25, 27, 29});
  for (const auto& p : powers) {
    Int expected = 1;
    for (unsigned k = 0; k < p.alpha; ++k) expected *= p.p;
    CHECK(expected == p.n);
  }
}
