#include "hyperfact/verify.hpp"

#include <random>
#include <sstream>

#include "hyperfact/baseline.hpp"
#include "hyperfact/curves.hpp"
#include "hyperfact/epsilon.hpp"
#include "hyperfact/hyperbola.hpp"
#include "hyperfact/parallel.hpp"
#include "hyperfact/pipeline.hpp"

namespace hyperfact {

namespace {

struct NValue {
  std::uint64_t n = 0;
  std::vector<CheckResult> failures;
  std::vector<std::string> notes;
  std::uint64_t checks = 0;

  void expect(bool ok, const std::string& name, const std::string& detail = "") {
    ++checks;
    if (!ok)
      failures.push_back({name + " [n=" + std::to_string(n) + "]", false, detail});
  }
};

void merge(VerifySuiteResult& suite, std::vector<NValue> parts) {
  for (auto& part : parts) {
    suite.checks_run += part.checks;
    for (auto& f : part.failures) suite.failures.push_back(std::move(f));
    for (auto& note : part.notes) suite.notes.push_back(std::move(note));
  }
}

// Brute-force curve enumeration over both x ranges; test oracle for the
// divisor-pair enumeration, feasible for small n only.
std::vector<std::pair<std::int64_t, std::int64_t>> scan_points(std::uint64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  const std::int64_t lo = -static_cast<std::int64_t>((n - 1) * (n - 1));
  const std::int64_t hi = static_cast<std::int64_t>((n + 1) * (n + 1));
  for (std::int64_t x = lo; x <= hi; ++x) {
    const std::int64_t rhs = x * x - 4 * static_cast<std::int64_t>(n) * x;
    if (rhs < 0) continue;
    if (!is_square_u64(static_cast<std::uint64_t>(rhs))) continue;
    const std::int64_t y = static_cast<std::int64_t>(
        isqrt_u64(static_cast<std::uint64_t>(rhs)));
    pts.emplace_back(x, y);
    if (y != 0) pts.emplace_back(x, -y);
  }
  return pts;
}

VerifySuiteResult suite_cardinality(const VerifyOptions& opts) {
  VerifySuiteResult suite{"cardinality"};

  const auto semis = odd_semiprimes_below(opts.semiprimes_to);
  auto per_semi = [](const OddSemiprime& sp) {
    NValue r{sp.n};
    const HyperbolaParams params{Int(sp.n)};
    const auto points = enumerate_integral_points(params);
    r.expect(points.size() == 18, "enumeration-count-18",
             std::to_string(points.size()) + " points");
    r.expect(cardinality_total(params) == 18, "closed-form-total");
    r.expect(cardinality_region(params) == 5, "closed-form-region");

    const auto five = five_points(Int(sp.p), Int(sp.q));
    std::vector<HyperbolaPoint> region;
    for (const auto& pt : points)
      if (pt.x >= 4 * params.n && pt.y >= 0) region.push_back(pt);
    r.expect(region.size() == 5, "region-count-5");
    if (region.size() == 5) {
      const std::vector<HyperbolaPoint> expected = {five.p0, five.p1, five.p2,
                                                    five.p3, five.p4};
      auto sorted = expected;
      std::sort(sorted.begin(), sorted.end());
      r.expect(std::equal(region.begin(), region.end(), sorted.begin()),
               "region-equals-five-points");
    }
    for (const auto& pt : points)
      r.expect(on_curve(params, pt.x, pt.y), "enumerated-point-on-curve");
    return r;
  };
  merge(suite, parallel_map(semis, opts.workers, per_semi));

  const auto powers = prime_powers_below(opts.prime_powers_to);
  auto per_power = [](const PrimePowerValue& pp) {
    NValue r{pp.n};
    if (pp.n < 2) return r;
    const HyperbolaParams params{Int(pp.n)};
    const auto points = enumerate_integral_points(params);
    r.expect(points.size() == 4 * pp.alpha + 2, "prime-power-count-4a+2",
             std::to_string(points.size()) + " points, alpha=" +
                 std::to_string(pp.alpha));
    r.expect(cardinality_total(params) == Int(4 * pp.alpha + 2),
             "closed-form-total");
    r.expect(cardinality_region(params) == Int(pp.alpha + 1),
             "closed-form-region");
    return r;
  };
  merge(suite, parallel_map(powers, opts.workers, per_power));

  // Independent range-scan cross-check; quadratic per n, capped at the
  // design range.
  std::vector<std::uint64_t> small;
  const std::uint64_t scan_cap = std::min<std::uint64_t>(opts.scan_to, 2001);
  for (std::uint64_t n = 2; n < scan_cap; ++n) small.push_back(n);
  auto per_scan = [](std::uint64_t n) {
    NValue r{n};
    const HyperbolaParams params{Int(n)};
    const auto points = enumerate_integral_points(params);
    const auto scanned = scan_points(n);
    r.expect(points.size() == scanned.size(), "scan-cross-check",
             std::to_string(points.size()) + " vs " +
                 std::to_string(scanned.size()));
    return r;
  };
  merge(suite, parallel_map(small, opts.workers, per_scan));
  return suite;
}

VerifySuiteResult suite_group_law(const VerifyOptions& opts) {
  VerifySuiteResult suite{"group-law"};
  const auto semis = odd_semiprimes_below(opts.semiprimes_to);
  auto per_semi = [](const OddSemiprime& sp) {
    NValue r{sp.n};
    const HyperbolaParams params{Int(sp.n)};
    const auto five = five_points(Int(sp.p), Int(sp.q));
    const auto sum23 = add(params, five.p2, five.p3);
    r.expect(sum23 == five.p4, "p2-plus-p3-is-p4");
    const auto twice_p2 = add(params, five.p2, five.p2);
    r.expect(add(params, five.p1, twice_p2) == five.p4, "p1-plus-2p2-is-p4");

    const auto id = identity_point(params);
    const auto points = enumerate_integral_points(params);
    for (const auto& pt : points) {
      r.expect(add(params, pt, id) == pt, "identity-element");
      for (const auto& qt : points) {
        const auto ab = add(params, pt, qt);
        r.expect(on_curve(params, ab.x, ab.y), "closure-on-curve");
        r.expect(ab == add(params, qt, pt), "commutativity");
      }
    }
    const HyperbolaPoint origin(params, Rat(0), Rat(0));
    r.expect(add(params, origin, origin) == id, "origin-doubling");
    return r;
  };
  merge(suite, parallel_map(semis, opts.workers, per_semi));
  return suite;
}

VerifySuiteResult suite_epsilon(const VerifyOptions& opts) {
  VerifySuiteResult suite{"epsilon-factor"};
  const auto semis = odd_semiprimes_below(opts.factor_to);
  auto per_semi = [](const OddSemiprime& sp) {
    NValue r{sp.n};
    const Int n(sp.n), p(sp.q), q(sp.p);  // p > q
    const auto found = epsilon_factor(n);
    r.expect(found.has_value(), "epsilon-search-finds-split");
    if (!found) return r;
    r.expect(found->p == p && found->q == q, "epsilon-matches-sieve");
    r.expect(found->p + found->q == n - 1 - 2 * found->epsilon,
             "certificate-sum");
    r.expect(f1(n, found->epsilon) ==
                 (found->p - found->q) * (found->p - found->q),
             "f1-equals-square-gap");

    const auto prof = EpsilonProfile::from_factors(p, q);
    const auto five = five_points(p, q);
    const Rat sum = five.p2.x + five.p3.x;
    const Rat prod = five.p2.x * five.p3.x;
    r.expect(Rat(prof.hyper_x) == sum && Rat(prof.hyper_y) == prod,
             "hyper-roots-match-points");

    const auto fm = fermat(n);
    r.expect(fm.has_value() && fm->p == q && fm->q == p, "fermat-agrees");
    if (fm) r.expect(fm->s == n - 1 - 2 * found->epsilon, "fermat-s-link");

    const auto td = trial_division(n);
    r.expect(td.has_value() && td->first == q && td->second == p,
             "trial-division-agrees");
    return r;
  };
  merge(suite, parallel_map(semis, opts.workers, per_semi));
  return suite;
}

VerifySuiteResult suite_chain(const VerifyOptions& opts) {
  VerifySuiteResult suite{"chain-roundtrip"};
  auto per_n = [&](std::uint64_t nv) {
    NValue r{nv};
    const Int n(nv);
    const CurveSystem cs(n);
    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + nv);
    std::uniform_int_distribution<std::int64_t> num_dist(-1000000000, 1000000000);
    std::uniform_int_distribution<std::int64_t> den_dist(1, 1000000);

    for (unsigned i = 0; i < opts.chain_samples; ++i) {
      std::int64_t num = num_dist(rng);
      if (num == 0) num = 1;
      const Rat x = make_rat(Int(num), Int(den_dist(rng)));
      // On-curve sample: Z = +-(X^2 - 8nX + e).
      Rat g = x * x - 8 * n * x + cs.quartic().e;
      g.canonicalize();
      const JqPoint jq{x, (rng() & 1) ? g : Rat(-g)};
      r.expect(cs.jq_on_curve(jq.x, jq.z), "sample-on-quartic");

      const RnPoint rn = cs.map_I_inv(jq);
      r.expect(cs.rn_eval(rn.x, rn.y) == 0, "pullback-on-rn");
      r.expect(cs.map_I(rn) == jq, "i-roundtrip");

      const EwPoint ew = cs.map_J(jq);
      r.expect(cs.ew_on_curve(ew), "image-on-long-curve");
      if (ew.at_infinity || ew.y == 0) continue;  // documented exceptional set
      r.expect(cs.map_J_inv(ew) == jq, "j-roundtrip");

      const EkPoint ek = cs.map_K(ew);
      r.expect(cs.ek_on_curve(ek), "image-on-short-curve");
      r.expect(cs.map_K_inv(ek) == ew, "k-roundtrip");

      // Composed backward walk recovers the R_n point exactly.
      const EwPoint ew_back = cs.map_K_inv(ek);
      const JqPoint jq_back = cs.map_J_inv(ew_back);
      const RnPoint rn_back = cs.map_I_inv(jq_back);
      r.expect(rn_back == rn, "composed-roundtrip");
    }

    // True-pair walk ends in a factorization.
    const auto found = epsilon_factor(n);
    r.expect(found.has_value(), "true-epsilon-found");
    if (found) {
      const auto prof = EpsilonProfile::from_epsilon(n, found->epsilon);
      const ChainTrace trace =
          ChainTrace::forward(cs, RnPoint{Rat(prof.hyper_x), Rat(prof.hyper_y)});
      const ChainEntry& last = trace.entries.back();
      const auto walked =
          backward_pipeline(n, EkPoint{last.at_infinity, last.first, last.second});
      r.expect(walked.outcome == ChainOutcome::kFactored, "true-pair-factors",
               outcome_name(walked.outcome));
    }
    return r;
  };
  merge(suite, parallel_map(opts.chain_moduli, opts.workers, per_n));
  return suite;
}

VerifySuiteResult suite_discriminant(const VerifyOptions& opts) {
  VerifySuiteResult suite{"jacobi-discriminant"};
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 2; n <= opts.discriminant_to; ++n) ns.push_back(n);
  auto per_n = [](std::uint64_t nv) {
    NValue r{nv};
    r.expect(sylvester_discriminant(Int(nv)) == 0, "discriminant-zero");
    return r;
  };
  merge(suite, parallel_map(ns, opts.workers, per_n));
  return suite;
}

VerifySuiteResult suite_system(const VerifyOptions& opts) {
  VerifySuiteResult suite{"bilinear-system"};
  const auto semis = odd_semiprimes_below(opts.system_to);
  auto per_semi = [](const OddSemiprime& sp) {
    NValue r{sp.n};
    const HyperbolaParams params{Int(sp.n)};
    const auto five = five_points(Int(sp.p), Int(sp.q));
    const auto inst = SystemInstance::from_points(params, five.p2, five.p3);
    r.expect(verify_system(inst), "system-holds-on-true-points");

    auto perturbed = inst;
    perturbed.Y2 += 1;
    r.expect(!verify_system(perturbed), "system-rejects-perturbation");

    const auto cx = corollary_x1(inst);
    const auto cy = corollary_y1(inst);
    r.expect(cx && *cx == inst.X1, "corollary-x1");
    r.expect(cy && *cy == inst.Y1, "corollary-y1");
    return r;
  };
  merge(suite, parallel_map(semis, opts.workers, per_semi));
  return suite;
}

VerifySuiteResult suite_gamma(const VerifyOptions& opts) {
  VerifySuiteResult suite{"gamma-scan"};
  const auto semis = odd_semiprimes_below(opts.gamma_to);
  auto per_semi = [](const OddSemiprime& sp) {
    NValue r{sp.n};
    const Int n(sp.n);
    const Int eps1 = epsilon_from_factors(Int(sp.p), Int(sp.q));
    const auto scan = gamma_scan(n, n);

    auto contains = [&](const Int& v) {
      for (const auto& m : scan.members)
        if (m.i == v) return true;
      return false;
    };
    r.expect(contains(eps1), "eps1-in-gamma");
    r.expect(contains(n), "n-in-gamma");
    r.expect(contains(n - 1 - eps1), "eps2-in-gamma");
    r.expect(f2(n, eps1) == f1(n, n) * f1(n, eps1), "f2-product-relation");
    if (scan.members.size() != 3) {
      std::ostringstream note;
      note << "gamma counterexample: n=" << sp.n << " has "
           << scan.members.size() << " members:";
      for (const auto& m : scan.members) note << " " << m.i.get_str();
      r.notes.push_back(note.str());
    }
    return r;
  };
  merge(suite, parallel_map(semis, opts.workers, per_semi));
  return suite;
}

VerifySuiteResult suite_jacobi(const VerifyOptions& opts) {
  VerifySuiteResult suite{"jacobi-identities"};
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 2; n <= std::max<std::uint64_t>(opts.discriminant_to, 100);
       ++n)
    ns.push_back(n);
  auto per_n = [](std::uint64_t nv) {
    NValue r{nv};
    const Int n(nv);
    const Int n2 = n * n, n4 = n2 * n2;
    const CurveSystem cs(n);
    const auto& jq = cs.quartic();
    r.expect(jq.e == n4 + 14 * n2 + 1, "e-closed-form");
    r.expect(jq.d == -16 * n * jq.e, "d-is-minus-16ne");
    const auto& ew = cs.long_curve();
    r.expect(ew.a1 * ew.a2 == ew.a3, "a1a2-equals-a3");
    const EkPoint t = cs.two_torsion_point();
    r.expect(t.y == 0, "two-torsion-y-zero");
    r.expect(cs.ek_on_curve(t), "two-torsion-on-curve");
    for (const auto& p : cs.rational_root_candidates())
      r.expect(cs.jq_on_curve(p.x, p.z), "rational-root-on-curve");
    return r;
  };
  merge(suite, parallel_map(ns, opts.workers, per_n));
  return suite;
}

}  // namespace

std::vector<VerifySuiteResult> run_verify(const VerifyOptions& opts) {
  std::vector<VerifySuiteResult> suites;
  suites.push_back(suite_cardinality(opts));
  suites.push_back(suite_group_law(opts));
  suites.push_back(suite_epsilon(opts));
  suites.push_back(suite_chain(opts));
  suites.push_back(suite_discriminant(opts));
  suites.push_back(suite_system(opts));
  suites.push_back(suite_gamma(opts));
  suites.push_back(suite_jacobi(opts));
  return suites;
}

}  // namespace hyperfact
