#include "hyperfact/pipeline.hpp"

#include <stdexcept>

#include "hyperfact/baseline.hpp"

namespace hyperfact {

SystemInstance SystemInstance::from_points(const HyperbolaParams& params,
                                           const HyperbolaPoint& p2,
                                           const HyperbolaPoint& p3) {
  if (!p2.is_integral() || !p3.is_integral())
    throw std::domain_error("SystemInstance: points must be integral");
  SystemInstance inst;
  inst.N = params.n;
  inst.X1 = p2.x.get_num() - 2 * params.n;
  inst.Y1 = p2.y.get_num();
  inst.X2 = p3.x.get_num() - 2 * params.n;
  inst.Y2 = p3.y.get_num();
  return inst;
}

bool verify_system(const SystemInstance& inst) {
  return inst.X1 * inst.X2 + inst.Y1 * inst.Y2 == inst.a() &&
         inst.X2 * inst.Y1 + inst.X1 * inst.Y2 == inst.b();
}

std::optional<Rat> corollary_x1(const SystemInstance& inst) {
  const Int den = inst.Y2 * inst.Y2 - inst.X2 * inst.X2;
  if (den == 0) return std::nullopt;
  return make_rat(inst.b() * inst.Y2 - inst.a() * inst.X2, den);
}

std::optional<Rat> corollary_y1(const SystemInstance& inst) {
  const Int den = inst.X2 * inst.X2 - inst.Y2 * inst.Y2;
  if (den == 0) return std::nullopt;
  return make_rat(inst.b() * inst.X2 - inst.a() * inst.Y2, den);
}

std::pair<Rat, Rat> h_map(const HyperbolaPoint& p2, const HyperbolaPoint& p3) {
  Rat sum = p2.x + p3.x;
  Rat prod = p2.x * p3.x;
  sum.canonicalize();
  prod.canonicalize();
  return {sum, prod};
}

std::optional<std::pair<Int, Int>> h_inv(const Int& x_sum, const Int& y_prod) {
  const Int disc = x_sum * x_sum - 4 * y_prod;
  const auto r = is_perfect_square(disc);
  if (!r) return std::nullopt;
  if (mpz_odd_p(Int(x_sum - *r).get_mpz_t())) return std::nullopt;
  return std::make_pair((x_sum - *r) / 2, (x_sum + *r) / 2);
}

std::string outcome_name(ChainOutcome o) {
  switch (o) {
    case ChainOutcome::kFactored: return "factored";
    case ChainOutcome::kAtInfinity: return "at-infinity";
    case ChainOutcome::kTwoTorsion: return "two-torsion";
    case ChainOutcome::kNotIntegral: return "not-integral";
    case ChainOutcome::kNotPositive: return "not-positive";
    case ChainOutcome::kNoIntegerRoots: return "no-integer-roots";
    case ChainOutcome::kTrivialGcd: return "trivial-gcd";
  }
  return "?";
}

namespace {

// gcd(x_{P2}, n), then gcd(x_{P3}, n), then the y-coordinates.
std::optional<std::pair<Int, Int>> gcd_ladder(const Int& n, const Int& x2,
                                              const Int& x3) {
  auto nontrivial = [&](const Int& v) -> std::optional<Int> {
    const Int g = gcd(v, n);
    if (g > 1 && g < n) return g;
    return std::nullopt;
  };
  std::vector<Int> candidates = {x2, x3};
  for (const Int& x : {x2, x3}) {
    const auto y_sq = is_perfect_square(x * x - 4 * n * x);
    if (y_sq) candidates.push_back(*y_sq);
  }
  for (const Int& v : candidates)
    if (const auto g = nontrivial(v)) {
      const Int p = *g, q = n / *g;
      return std::make_pair(std::min(p, q), std::max(p, q));
    }
  return std::nullopt;
}

}  // namespace

PipelineResult backward_pipeline(const Int& n, const EkPoint& start) {
  const CurveSystem cs(n);
  PipelineResult result{ChainOutcome::kFactored, std::nullopt, std::nullopt,
                        std::nullopt};

  if (start.at_infinity) {
    result.outcome = ChainOutcome::kAtInfinity;
    return result;
  }
  const EwPoint ew = cs.map_K_inv(start);
  if (ew.y == 0) {
    result.outcome = ChainOutcome::kTwoTorsion;
    return result;
  }
  const JqPoint jq = cs.map_J_inv(ew);
  const RnPoint rn = cs.map_I_inv(jq);

  if (!is_integral(rn.x) || !is_integral(rn.y)) {
    result.outcome = ChainOutcome::kNotIntegral;
    return result;
  }
  if (rn.x <= 0 || rn.y <= 0) {
    result.outcome = ChainOutcome::kNotPositive;
    return result;
  }
  const Int hyper_x = rn.x.get_num(), hyper_y = rn.y.get_num();
  const auto roots = h_inv(hyper_x, hyper_y);
  if (!roots) {
    result.outcome = ChainOutcome::kNoIntegerRoots;
    return result;
  }
  result.hyperbola_roots = roots;

  const auto pq = gcd_ladder(n, roots->first, roots->second);
  if (!pq) {
    result.outcome = ChainOutcome::kTrivialGcd;
    return result;
  }
  result.gcds = std::make_pair(gcd(roots->first, n), gcd(roots->second, n));
  result.outcome = ChainOutcome::kFactored;
  result.factors = FactorResult{pq->first, pq->second, "chain",
                                ChainTrace::forward(cs, rn)};
  return result;
}

namespace {

void screen_factor_input(const Int& n) {
  if (mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("factor: n is even; divide out 2 first");
  if (n < 15) throw std::domain_error("factor: n must be >= 15");
  if (is_prime(n)) throw std::domain_error("factor: n is prime");
}

void cross_validate(const Int& n, const FactorResult& fr) {
  if (fr.p * fr.q != n) throw std::logic_error("factor: p*q != n");
  if (n < 1000000) {
    const auto td = trial_division(n);
    if (!td || td->first != fr.p)
      throw std::logic_error(
          "factor: smallest factor disagrees with trial division");
  }
}

}  // namespace

std::optional<FactorResult> factor(const Int& n, FactorStrategy strategy,
                                   const std::optional<Int>& eps_budget) {
  screen_factor_input(n);
  const auto eps = epsilon_factor(n, eps_budget.value_or(n / 2));
  if (!eps) return std::nullopt;

  if (strategy == FactorStrategy::kEpsilon) {
    FactorResult fr{std::min(eps->p, eps->q), std::max(eps->p, eps->q),
                    "epsilon", EpsilonProfile::from_epsilon(n, eps->epsilon)};
    cross_validate(n, fr);
    return fr;
  }

  // Chain strategy: forward-map the certified root pair to E_k, then run
  // the backward walk and extract the factors from the recovered roots.
  const auto prof = EpsilonProfile::from_epsilon(n, eps->epsilon);
  const CurveSystem cs(n);
  const RnPoint rn{Rat(prof.hyper_x), Rat(prof.hyper_y)};
  const ChainTrace trace = ChainTrace::forward(cs, rn);
  const ChainEntry& last = trace.entries.back();
  const EkPoint ek{last.at_infinity, last.first, last.second};
  const PipelineResult walked = backward_pipeline(n, ek);
  if (walked.outcome != ChainOutcome::kFactored || !walked.factors)
    return std::nullopt;
  FactorResult fr = *walked.factors;
  cross_validate(n, fr);
  return fr;
}

}  // namespace hyperfact
