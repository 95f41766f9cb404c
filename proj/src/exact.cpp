#include "hyperfact/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace hyperfact {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int isqrt(const Int& m) {
  if (m < 0) throw std::domain_error("isqrt: negative input");
  Int r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<Int> is_perfect_square(const Int& m) {
  if (m < 0) return std::nullopt;
  if (mpz_perfect_square_p(m.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(m);
}

std::uint64_t isqrt_u64(std::uint64_t m) {
  if (m == 0) return 0;
  const unsigned bits = 64u - static_cast<unsigned>(std::countl_zero(m));
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    const std::uint64_t y = (x + m / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (static_cast<unsigned __int128>(x) * x > m) --x;
  while (static_cast<unsigned __int128>(x + 1) * (x + 1) <= m) ++x;
  return x;
}

namespace {

// Bitmask of quadratic residues mod 64.
constexpr std::uint64_t square_mask_mod64() {
  std::uint64_t mask = 0;
  for (unsigned r = 0; r < 64; ++r) mask |= std::uint64_t{1} << ((r * r) % 64);
  return mask;
}
constexpr std::uint64_t kSquaresMod64 = square_mask_mod64();

// 45045 = 3^2 * 5 * 7 * 11 * 13; residue table rejects ~95% of non-squares.
constexpr std::uint32_t kResidueModulus = 45045;

const std::vector<bool>& square_residues_45045() {
  static const std::vector<bool> table = [] {
    std::vector<bool> t(kResidueModulus, false);
    for (std::uint64_t r = 0; r < kResidueModulus; ++r)
      t[static_cast<std::size_t>((r * r) % kResidueModulus)] = true;
    return t;
  }();
  return table;
}

}  // namespace

bool is_square_u64(std::uint64_t m) {
  if (((kSquaresMod64 >> (m & 63u)) & 1u) == 0) return false;
  if (!square_residues_45045()[m % kResidueModulus]) return false;
  const std::uint64_t s = isqrt_u64(m);
  return s * s == m;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::optional<unsigned long> p_adic_valuation(const Int& p, const Int& m) {
  if (!is_prime(p)) throw std::domain_error("p_adic_valuation: p is not prime");
  if (m == 0) return std::nullopt;
  Int reduced;
  const auto k = mpz_remove(reduced.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
  return static_cast<unsigned long>(k);
}

namespace {

constexpr std::array<unsigned, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};

// Deterministic bound for the witness set above.
const Int& miller_rabin_bound() {
  static const Int bound("3317044064679887385961981");
  return bound;
}

bool miller_rabin(const Int& n) {
  // n odd, n > 37 here.
  Int d = n - 1;
  unsigned long r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++r;
  }
  const Int n_minus_1 = n - 1;
  for (unsigned a : kWitnesses) {
    Int base(a), x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long i = 0; i + 1 < r; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool trial_division_prime(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return n == 2;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < miller_rabin_bound()) return miller_rabin(n);
  return trial_division_prime(n);
}

std::vector<PrimePower> factorize(Int n) {
  if (n < 1) throw std::domain_error("factorize: n must be >= 1");
  std::vector<PrimePower> out;
  auto strip = [&](const Int& p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  for (Int d = 3; d * d <= n; d += 2) strip(d);
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = ds.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

std::vector<OddSemiprime> odd_semiprimes_below(std::uint64_t bound) {
  std::vector<OddSemiprime> out;
  if (bound < 16) bound = (bound > 0) ? bound : 1;
  std::vector<std::uint32_t> spf(bound, 0);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (spf[i] == 0)
      for (std::uint64_t j = i; j < bound; j += i)
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }
  for (std::uint64_t n = 15; n < bound; n += 2) {
    const std::uint64_t p = spf[n];
    if (p == n || p == 2) continue;  // prime, or even (cannot happen for odd n)
    const std::uint64_t q = n / p;
    if (q == p) continue;            // p^2 excluded: distinct factors only
    if (spf[q] == q) out.push_back({n, p, q});
  }
  return out;
}

std::vector<PrimePowerValue> prime_powers_below(std::uint64_t bound) {
  std::vector<PrimePowerValue> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i * i < bound; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  for (std::uint64_t p = 2; p < bound; ++p) {
    if (composite[p]) continue;
    std::uint64_t n = p;
    unsigned alpha = 1;
    while (n < bound) {
      out.push_back({n, p, alpha});
      if (n > (bound - 1) / p) break;
      n *= p;
      ++alpha;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePowerValue& a, const PrimePowerValue& b) { return a.n < b.n; });
  return out;
}

}  // namespace hyperfact
