#include "hyperfact/epsilon.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hyperfact {

EpsilonProfile EpsilonProfile::from_epsilon(const Int& n, const Int& epsilon) {
  if (epsilon <= 0 || epsilon >= n)
    throw std::domain_error("EpsilonProfile: epsilon must satisfy 0 < epsilon < n");
  EpsilonProfile prof;
  prof.n = n;
  prof.epsilon = epsilon;
  prof.k = 2 * (n - epsilon);
  prof.sum_pq = n - 1 - 2 * epsilon;
  prof.phi = 2 * (epsilon + 1);
  prof.hyper_x = prof.k * (n + 1) - (n - 1) * (n - 1);
  prof.hyper_y = prof.k * prof.k * n;
  return prof;
}

EpsilonProfile EpsilonProfile::from_factors(const Int& p, const Int& q) {
  return from_epsilon(p * q, epsilon_from_factors(p, q));
}

std::pair<Int, Int> hyper_roots_from_epsilon(const Int& n, const Int& epsilon) {
  const auto prof = EpsilonProfile::from_epsilon(n, epsilon);
  return {prof.hyper_x, prof.hyper_y};
}

Int epsilon_from_factors(const Int& p, const Int& q) {
  const Int n = p * q;
  const Int twice = n - 1 - (p + q);
  if (twice <= 0 || mpz_odd_p(twice.get_mpz_t()))
    throw std::domain_error("epsilon_from_factors: factors must be distinct odd primes");
  return twice / 2;
}

Int f1(const Int& n, const Int& i) {
  return 4 * i * i + 4 * (1 - n) * i + n * n - 6 * n + 1;
}

Int f2(const Int& n, const Int& i) {
  const Int n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  return 4 * (n2 - 2 * n + 1) * i * i + 4 * (3 * n2 - n3 - 3 * n + 1) * i + n4 -
         8 * n3 + 14 * n2 - 8 * n + 1;
}

namespace {

std::optional<GammaSource> gamma_membership(const Int& n, const Int& i) {
  const bool hit1 = is_perfect_square(f1(n, i)).has_value();
  const bool hit2 = is_perfect_square(f2(n, i)).has_value();
  if (hit1 && hit2) return GammaSource::kBoth;
  if (hit1) return GammaSource::kF1;
  if (hit2) return GammaSource::kF2;
  return std::nullopt;
}

std::vector<GammaMember> gamma_scan_range(const Int& n, const Int& lo, const Int& hi) {
  std::vector<GammaMember> out;
  for (Int i = lo; i <= hi; ++i)
    if (const auto src = gamma_membership(n, i)) out.push_back({i, *src});
  return out;
}

}  // namespace

GammaScanResult gamma_scan(const Int& n, const Int& i_max, unsigned workers) {
  if (n < 3 || mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("gamma_scan: n must be odd and >= 3");
  if (i_max < 1) throw std::domain_error("gamma_scan: i_max must be >= 1");

  GammaScanResult result;
  result.n = n;
  result.i_max = i_max;

  if (workers <= 1 || i_max < 256) {
    result.members = gamma_scan_range(n, Int(1), i_max);
  } else {
    // Contiguous chunks merged in index order: output is independent of
    // scheduling.
    const unsigned parts = workers;
    std::vector<std::vector<GammaMember>> partial(parts);
    std::vector<std::thread> threads;
    const Int span = (i_max + parts - 1) / parts;
    for (unsigned w = 0; w < parts; ++w) {
      const Int lo = Int(1) + span * w;
      Int hi = lo + span - 1;
      if (hi > i_max) hi = i_max;
      if (lo > hi) break;
      threads.emplace_back(
          [&, w, lo, hi] { partial[w] = gamma_scan_range(n, lo, hi); });
    }
    for (auto& t : threads) t.join();
    for (auto& chunk : partial)
      result.members.insert(result.members.end(), chunk.begin(), chunk.end());
  }

  if (result.members.size() == 3) {
    const Int& m0 = result.members[0].i;
    const Int& m1 = result.members[1].i;
    const Int& m2 = result.members[2].i;
    if (m2 == n && m0 + m1 == n - 1 && f2(n, m0) == f1(n, n) * f1(n, m0)) {
      result.conjecture_holds = true;
      result.epsilon1 = m0;
      result.epsilon2 = m1;
    }
  }
  if (!result.conjecture_holds && !result.members.empty()) {
    result.epsilon1 = result.members.front().i;
    const Int partner = n - 1 - *result.epsilon1;
    for (const auto& m : result.members)
      if (m.i == partner) result.epsilon2 = partner;
  }
  return result;
}

Report check_epsilon_lemma(const Int& n, const Int& eps1, const Int& eps2) {
  if (eps1 + eps2 != n - 1)
    throw std::domain_error("check_epsilon_lemma: requires eps1 + eps2 = n - 1");
  Report report;
  auto push = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const auto [x1, y1] = hyper_roots_from_epsilon(n, eps1);
  const auto [x2, y2] = hyper_roots_from_epsilon(n, eps2);
  push("hyper-x-sum", x1 + x2 == 8 * n,
       "X_{e1}+X_{e2} = " + Int(x1 + x2).get_str());
  push("hyper-x-diff", x1 - x2 == 2 * (n + 1) * (eps2 - eps1),
       "X_{e1}-X_{e2} = " + Int(x1 - x2).get_str());

  const Int phi1 = 2 * (eps1 + 1), phi2 = 2 * (eps2 + 1);
  push("phi-sum", phi1 + phi2 == 2 * (n + 1),
       "phi sum = " + Int(phi1 + phi2).get_str());
  push("phi-product", phi1 * phi2 == 4 * (eps1 * eps2 + n),
       "phi product = " + Int(phi1 * phi2).get_str());
  return report;
}

namespace {

struct Candidate {
  Int p, q, epsilon;
};

// eps in [lo, hi] ascending; s = n - 1 - 2*eps. Returns the smallest hit.
std::optional<Candidate> scan_epsilon_mpz(const Int& n, const Int& lo, const Int& hi) {
  Int s = n - 1 - 2 * lo;
  Int rad = s * s - 4 * n;
  for (Int eps = lo; eps <= hi; ++eps) {
    if (rad < 0) break;
    if (const auto r = is_perfect_square(rad)) {
      if (*r > 0) {
        const Int p = (s + *r) / 2, q = (s - *r) / 2;
        if (q > 1 && p * q == n) return Candidate{p, q, eps};
      }
    }
    // (s-2)^2 - 4n = rad - 4s + 4
    rad -= 4 * s - 4;
    s -= 2;
  }
  return std::nullopt;
}

// 64-bit fast path; valid when n < 2^31 so that s^2 fits comfortably.
std::optional<Candidate> scan_epsilon_u64(std::uint64_t n, std::uint64_t lo,
                                          std::uint64_t hi) {
  if (n < 1 + 2 * lo) return std::nullopt;
  std::uint64_t s = n - 1 - 2 * lo;
  const std::uint64_t four_n = 4 * n;
  for (std::uint64_t eps = lo; eps <= hi; ++eps) {
    const std::uint64_t s2 = s * s;
    if (s2 < four_n) break;
    const std::uint64_t rad = s2 - four_n;
    if (is_square_u64(rad)) {
      const std::uint64_t r = isqrt_u64(rad);
      if (r > 0) {
        const std::uint64_t p = (s + r) / 2, q = (s - r) / 2;
        if (q > 1 && p * q == n) return Candidate{Int(p), Int(q), Int(eps)};
      }
    }
    if (s < 2) break;
    s -= 2;
  }
  return std::nullopt;
}

std::optional<Candidate> scan_chunk(const Int& n, const Int& lo, const Int& hi) {
  if (lo > hi) return std::nullopt;
  if (n.fits_ulong_p() && n.get_ui() < (1ull << 31))
    return scan_epsilon_u64(n.get_ui(), lo.get_ui(), hi.get_ui());
  return scan_epsilon_mpz(n, lo, hi);
}

}  // namespace

std::optional<EpsilonFactorResult> epsilon_factor(const Int& n, const Int& eps_budget,
                                                  unsigned workers) {
  if (mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("epsilon_factor: n must be odd");
  if (n < 3) throw std::domain_error("epsilon_factor: n must be >= 3");
  if (eps_budget < 1) return std::nullopt;

  Int hi = eps_budget;
  const Int valid_max = (n - 3) / 2;  // below this s = n-1-2*eps drops under 2
  if (hi > valid_max) hi = valid_max;
  if (hi < 1) return std::nullopt;

  std::optional<Candidate> found;
  if (workers <= 1 || hi < 65536 || !hi.fits_ulong_p()) {
    found = scan_chunk(n, Int(1), hi);
  } else {
    // Chunks are claimed in ascending order; once a hit exists, no chunk
    // beyond the hit's is started, and every chunk before it completes, so
    // the smallest certifying epsilon is returned deterministically.
    const Int chunk(32768);
    const unsigned long total_chunks =
        Int((hi + chunk - 1) / chunk).get_ui();
    std::atomic<unsigned long> next{0};
    std::atomic<unsigned long> hit_chunk{total_chunks};
    std::mutex mtx;
    std::vector<std::pair<unsigned long, Candidate>> hits;
    auto work = [&] {
      for (;;) {
        const unsigned long c = next.fetch_add(1);
        if (c >= total_chunks || c > hit_chunk.load()) break;
        const Int lo = Int(1) + chunk * c;
        Int h = lo + chunk - 1;
        if (h > hi) h = hi;
        if (auto cand = scan_chunk(n, lo, h)) {
          unsigned long expected = hit_chunk.load();
          while (c < expected && !hit_chunk.compare_exchange_weak(expected, c)) {
          }
          std::lock_guard<std::mutex> lock(mtx);
          hits.emplace_back(c, *cand);
        }
      }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
    if (!hits.empty()) {
      auto best = std::min_element(hits.begin(), hits.end(),
                                   [](const auto& a, const auto& b) {
                                     return a.second.epsilon < b.second.epsilon;
                                   });
      found = best->second;
    }
  }

  if (!found) return std::nullopt;
  return EpsilonFactorResult{found->p, found->q, found->epsilon};
}

std::optional<EpsilonFactorResult> epsilon_factor(const Int& n) {
  return epsilon_factor(n, n / 2);
}

}  // namespace hyperfact
