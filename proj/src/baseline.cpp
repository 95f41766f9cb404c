#include "hyperfact/baseline.hpp"

#include <stdexcept>

namespace hyperfact {

namespace {

struct TrialHit {
  Int p, q;
  std::uint64_t iterations;
};

std::optional<TrialHit> trial_division_impl(const Int& n) {
  if (n < 2) throw std::domain_error("trial_division: n must be >= 2");
  std::uint64_t iters = 1;
  if (mpz_even_p(n.get_mpz_t())) {
    if (n == 2) return std::nullopt;
    return TrialHit{Int(2), n / 2, iters};
  }
  if (n.fits_ulong_p()) {
    const std::uint64_t m = n.get_ui();
    for (std::uint64_t d = 3; d <= m / d; d += 2) {
      ++iters;
      if (m % d == 0) return TrialHit{Int(d), Int(m / d), iters};
    }
    return std::nullopt;
  }
  for (Int d = 3; d * d <= n; d += 2) {
    ++iters;
    if (n % d == 0) return TrialHit{d, n / d, iters};
  }
  return std::nullopt;
}

struct FermatHit {
  Int p, q, s;
  std::uint64_t iterations;
};

std::optional<FermatHit> fermat_impl(const Int& n) {
  if (mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("fermat: n must be odd");
  if (n < 9) return std::nullopt;  // no odd composite below 9

  // s ranges over candidate sums p + q; the smallest nontrivial divisor of
  // an odd composite is >= 3, so s <= n/3 + 3 suffices.
  const Int s_limit = n / 3 + 3;
  std::uint64_t iters = 0;

  if (n.fits_ulong_p() && n.get_ui() < (1ull << 31)) {
    const std::uint64_t m = n.get_ui();
    const std::uint64_t four_n = 4 * m;
    std::uint64_t s = isqrt_u64(four_n);
    if (s * s < four_n) ++s;
    const std::uint64_t limit = m / 3 + 3;
    for (; s <= limit; ++s) {
      ++iters;
      const std::uint64_t rad = s * s - four_n;
      if (!is_square_u64(rad)) continue;
      const std::uint64_t r = isqrt_u64(rad);
      if ((s + r) % 2 != 0) continue;
      const std::uint64_t q = (s - r) / 2;
      if (q <= 1) continue;
      const std::uint64_t p = (s + r) / 2;
      if (p * q == m) return FermatHit{Int(q), Int(p), Int(s), iters};
    }
    return std::nullopt;
  }

  Int s = isqrt(4 * n);
  if (s * s < 4 * n) ++s;
  for (; s <= s_limit; ++s) {
    ++iters;
    const Int rad = s * s - 4 * n;
    if (const auto r = is_perfect_square(rad)) {
      if (mpz_odd_p(Int(s + *r).get_mpz_t())) continue;
      const Int q = (s - *r) / 2;
      if (q <= 1) continue;
      const Int p = (s + *r) / 2;
      if (p * q == n) return FermatHit{q, p, s, iters};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Int, Int>> trial_division(const Int& n) {
  const auto hit = trial_division_impl(n);
  if (!hit) return std::nullopt;
  return std::make_pair(hit->p, hit->q);
}

std::optional<FermatResult> fermat(const Int& n) {
  const auto hit = fermat_impl(n);
  if (!hit) return std::nullopt;
  return FermatResult{hit->p, hit->q, hit->s};
}

std::optional<BaselineReport> trial_division_report(const Int& n) {
  const auto start = std::chrono::steady_clock::now();
  const auto hit = trial_division_impl(n);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  if (!hit) return std::nullopt;
  BaselineReport rep;
  rep.n = n;
  rep.p = hit->p;
  rep.q = hit->q;
  rep.iterations = hit->iterations;
  rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
  return rep;
}

std::optional<BaselineReport> fermat_report(const Int& n) {
  const auto start = std::chrono::steady_clock::now();
  const auto hit = fermat_impl(n);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  if (!hit) return std::nullopt;
  BaselineReport rep;
  rep.n = n;
  rep.p = hit->p;
  rep.q = hit->q;
  rep.iterations = hit->iterations;
  rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
  return rep;
}

}  // namespace hyperfact
