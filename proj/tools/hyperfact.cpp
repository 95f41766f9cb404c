// hyperfact: exact arithmetic toolkit for the hyperbola y^2 = x^2 - 4nx,
// its epsilon parameterization, the quartic-to-Weierstrass chain, and the
// factorization pipelines built on them.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperfact/baseline.hpp"
#include "hyperfact/curves.hpp"
#include "hyperfact/dataset.hpp"
#include "hyperfact/epsilon.hpp"
#include "hyperfact/exact.hpp"
#include "hyperfact/hyperbola.hpp"
#include "hyperfact/parallel.hpp"
#include "hyperfact/pipeline.hpp"
#include "hyperfact/verify.hpp"

namespace {

using hyperfact::Int;
using hyperfact::Rat;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct RunConfig {
  std::string command;
  std::string n_text;
  std::string method = "epsilon";
  std::string format = "text";
  std::string out_path;
  std::string eps_budget_text;
  std::uint64_t from = 0, to = 0;
  Int i_max = 0;
  unsigned workers = hyperfact::env_default_workers();
  std::uint64_t seed = 1;
};

class DomainRejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageRejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int parse_natural(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageRejection("expected a nonnegative integer, got '" + text + "'");
  return Int(text);
}

int cmd_factor(const RunConfig& cfg) {
  const Int n = parse_natural(cfg.n_text);
  Int p, q;
  json extra;
  std::string suffix;

  if (cfg.method == "epsilon" || cfg.method == "chain") {
    std::optional<Int> budget;
    if (!cfg.eps_budget_text.empty()) budget = parse_natural(cfg.eps_budget_text);
    std::optional<hyperfact::FactorResult> result;
    try {
      result = hyperfact::factor(n,
                                 cfg.method == "chain"
                                     ? hyperfact::FactorStrategy::kChain
                                     : hyperfact::FactorStrategy::kEpsilon,
                                 budget);
    } catch (const std::domain_error& e) {
      throw DomainRejection(e.what());
    }
    if (!result) throw DomainRejection("no factorization found within budget");
    p = result->p;
    q = result->q;
    if (const auto* prof =
            std::get_if<hyperfact::EpsilonProfile>(&result->certificate)) {
      suffix = " (epsilon=" + prof->epsilon.get_str() + ")";
      extra["epsilon"] = prof->epsilon.get_str();
      extra["k"] = prof->k.get_str();
      extra["hyper_x"] = prof->hyper_x.get_str();
      extra["hyper_y"] = prof->hyper_y.get_str();
    } else {
      suffix = " (chain)";
    }
  } else if (cfg.method == "fermat") {
    if (mpz_even_p(n.get_mpz_t()))
      throw DomainRejection("even input: divide out 2 first");
    const auto r = hyperfact::fermat(n);
    if (!r) throw DomainRejection("no factorization found (prime input?)");
    p = r->p;
    q = r->q;
    suffix = " (fermat s=" + r->s.get_str() + ")";
    extra["s"] = r->s.get_str();
  } else {  // trial
    if (n < 2) throw DomainRejection("n must be >= 2");
    const auto r = hyperfact::trial_division(n);
    if (!r) throw DomainRejection("prime input: " + n.get_str());
    p = r->first;
    q = r->second;
    suffix = " (trial)";
  }

  if (cfg.format == "json") {
    json obj;
    obj["n"] = n.get_str();
    obj["p"] = p.get_str();
    obj["q"] = q.get_str();
    obj["method"] = cfg.method;
    for (auto& [key, value] : extra.items()) obj[key] = value;
    std::cout << obj.dump(2) << "\n";
  } else {
    std::cout << n.get_str() << " = " << p.get_str() << " × " << q.get_str()
              << suffix << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  const Int n = parse_natural(cfg.n_text);
  if (n < 2) throw DomainRejection("n must be >= 2");
  const hyperfact::HyperbolaParams params{n};
  const auto points = hyperfact::enumerate_integral_points(params);

  std::size_t region = 0;
  for (const auto& pt : points)
    if (pt.x >= 4 * n && pt.y >= 0) ++region;

  std::optional<Int> closed_total, closed_region;
  try {
    closed_total = hyperfact::cardinality_total(params);
    closed_region = hyperfact::cardinality_region(params);
  } catch (const std::domain_error&) {
    // no closed form for this n; enumeration output stands alone
  }

  if (cfg.format == "json") {
    json obj;
    obj["n"] = n.get_str();
    obj["total"] = points.size();
    obj["region"] = region;
    if (closed_total) obj["closed_form_total"] = closed_total->get_str();
    if (closed_region) obj["closed_form_region"] = closed_region->get_str();
    json arr = json::array();
    for (const auto& pt : points)
      arr.push_back({pt.x.get_num().get_str(), pt.y.get_num().get_str()});
    obj["points"] = std::move(arr);
    std::cout << obj.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "x,y\n";
    for (const auto& pt : points)
      std::cout << pt.x.get_num().get_str() << ',' << pt.y.get_num().get_str()
                << '\n';
  } else {
    for (const auto& pt : points)
      std::cout << '(' << pt.x.get_num().get_str() << ", "
                << pt.y.get_num().get_str() << ")\n";
    std::cout << "total: " << points.size() << "\n";
    std::cout << "region x>=4n, y>=0: " << region << "\n";
    if (closed_total)
      std::cout << "closed-form total: " << closed_total->get_str()
                << (Int(points.size()) == *closed_total ? " (match)"
                                                        : " (MISMATCH)")
                << "\n";
  }
  return kExitOk;
}

int cmd_scan_gamma(const RunConfig& cfg) {
  const Int n = parse_natural(cfg.n_text);
  const Int i_max = cfg.i_max > 0 ? cfg.i_max : n;
  hyperfact::GammaScanResult scan;
  try {
    scan = hyperfact::gamma_scan(n, i_max, cfg.workers);
  } catch (const std::domain_error& e) {
    throw DomainRejection(e.what());
  }

  auto source_label = [](hyperfact::GammaSource s) {
    switch (s) {
      case hyperfact::GammaSource::kF1: return "f1";
      case hyperfact::GammaSource::kF2: return "f2";
      case hyperfact::GammaSource::kBoth: return "f1+f2";
    }
    return "?";
  };

  if (cfg.format == "json") {
    json obj;
    obj["n"] = n.get_str();
    obj["i_max"] = i_max.get_str();
    json members = json::array();
    for (const auto& m : scan.members)
      members.push_back({{"i", m.i.get_str()}, {"source", source_label(m.source)}});
    obj["members"] = std::move(members);
    obj["epsilon1"] = scan.epsilon1 ? scan.epsilon1->get_str() : "";
    obj["epsilon2"] = scan.epsilon2 ? scan.epsilon2->get_str() : "";
    obj["conjecture_holds"] = scan.conjecture_holds;
    std::cout << obj.dump(2) << "\n";
  } else {
    std::cout << "Gamma(" << n.get_str() << ") over 1.." << i_max.get_str()
              << ":";
    for (const auto& m : scan.members)
      std::cout << ' ' << m.i.get_str() << '[' << source_label(m.source) << ']';
    std::cout << "\n#Gamma = " << scan.members.size() << ", conjecture "
              << (scan.conjecture_holds ? "holds" : "FAILS") << "\n";
    if (scan.epsilon1)
      std::cout << "epsilon1 = " << scan.epsilon1->get_str()
                << (scan.epsilon2 ? ", epsilon2 = " + scan.epsilon2->get_str()
                                  : "")
                << "\n";
  }
  return kExitOk;
}

int cmd_chain(const RunConfig& cfg) {
  const Int n = parse_natural(cfg.n_text);
  std::optional<hyperfact::FactorResult> result;
  try {
    result = hyperfact::factor(n, hyperfact::FactorStrategy::kChain);
  } catch (const std::domain_error& e) {
    throw DomainRejection(e.what());
  }
  if (!result) throw DomainRejection("no factorization found within budget");
  const auto& trace = std::get<hyperfact::ChainTrace>(result->certificate);
  const auto roots = hyperfact::h_inv(trace.entries.front().first.get_num(),
                                      trace.entries.front().second.get_num());

  if (cfg.format == "json") {
    json obj;
    obj["n"] = n.get_str();
    json stages = json::array();
    for (const auto& entry : trace.entries) {
      json stage;
      stage["stage"] = hyperfact::stage_name(entry.stage);
      if (entry.at_infinity)
        stage["point"] = "infinity";
      else
        stage["point"] = {hyperfact::rat_str(entry.first),
                          hyperfact::rat_str(entry.second)};
      stages.push_back(std::move(stage));
    }
    obj["stages"] = std::move(stages);
    if (roots) obj["roots"] = {roots->first.get_str(), roots->second.get_str()};
    obj["p"] = result->p.get_str();
    obj["q"] = result->q.get_str();
    std::cout << obj.dump(2) << "\n";
  } else {
    for (const auto& entry : trace.entries) {
      std::cout << hyperfact::stage_name(entry.stage) << ": ";
      if (entry.at_infinity)
        std::cout << "infinity\n";
      else
        std::cout << '(' << hyperfact::rat_str(entry.first) << ", "
                  << hyperfact::rat_str(entry.second) << ")\n";
    }
    if (roots)
      std::cout << "roots: {" << roots->first.get_str() << ", "
                << roots->second.get_str() << "}\n";
    std::cout << "gcd extraction: " << n.get_str() << " = "
              << result->p.get_str() << " × " << result->q.get_str() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const hyperfact::VerifyOptions& opts, const std::string& format) {
  const auto suites = hyperfact::run_verify(opts);
  bool all_pass = true;
  std::uint64_t total_checks = 0;
  for (const auto& s : suites) {
    all_pass = all_pass && s.pass();
    total_checks += s.checks_run;
  }

  if (format == "json") {
    json obj;
    obj["pass"] = all_pass;
    obj["total_checks"] = total_checks;
    json arr = json::array();
    for (const auto& s : suites) {
      json entry;
      entry["suite"] = s.suite;
      entry["checks"] = s.checks_run;
      entry["pass"] = s.pass();
      json fails = json::array();
      for (const auto& f : s.failures) fails.push_back(f.name + ": " + f.detail);
      entry["failures"] = std::move(fails);
      json notes = json::array();
      for (const auto& note : s.notes) notes.push_back(note);
      entry["notes"] = std::move(notes);
      arr.push_back(std::move(entry));
    }
    obj["suites"] = std::move(arr);
    std::cout << obj.dump(2) << "\n";
  } else {
    for (const auto& s : suites) {
      std::cout << (s.pass() ? "[PASS] " : "[FAIL] ") << s.suite << " ("
                << s.checks_run << " checks)\n";
      for (const auto& f : s.failures)
        std::cout << "       failed: " << f.name
                  << (f.detail.empty() ? "" : " - " + f.detail) << "\n";
      for (const auto& note : s.notes)
        std::cout << "       note: " << note << "\n";
    }
    std::cout << (all_pass ? "all suites passed" : "FAILURES present") << " ("
              << total_checks << " checks)\n";
  }
  return all_pass ? kExitOk : kExitDomain;
}

int cmd_dataset(const RunConfig& cfg) {
  if (cfg.to < cfg.from) throw UsageRejection("--to must be >= --from");
  const auto rows = hyperfact::dataset_rows(cfg.from, cfg.to, cfg.workers);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!cfg.out_path.empty() && cfg.out_path != "-") {
    file.open(cfg.out_path);
    if (!file) {
      std::cerr << "error: cannot open output path: " << cfg.out_path << "\n";
      return kExitIo;
    }
    out = &file;
  }
  if (cfg.format == "json")
    hyperfact::write_dataset_json(*out, rows);
  else
    hyperfact::write_dataset_csv(*out, rows);
  out->flush();
  if (!out->good()) {
    std::cerr << "error: write failed: " << cfg.out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, const std::vector<std::string>& methods) {
  std::vector<std::uint64_t> targets;
  if (!cfg.n_text.empty()) {
    const Int n = parse_natural(cfg.n_text);
    if (!n.fits_ulong_p()) throw DomainRejection("bench target too large");
    targets.push_back(n.get_ui());
  } else {
    for (const auto& sp : hyperfact::odd_semiprimes_below(cfg.to))
      targets.push_back(sp.n);
  }
  if (targets.empty()) throw DomainRejection("no bench targets in range");

  struct Row {
    std::uint64_t n;
    std::string method;
    std::string p, q;
    std::uint64_t iterations;
    long long ns;
  };
  std::vector<Row> rows;
  for (const std::uint64_t nv : targets) {
    const Int n(nv);
    for (const auto& method : methods) {
      if (method == "epsilon") {
        if (nv % 2 == 0) continue;
        const auto start = std::chrono::steady_clock::now();
        const auto r = hyperfact::epsilon_factor(n);
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (r)  // candidate count equals the certifying epsilon
          rows.push_back({nv, method, r->q.get_str(), r->p.get_str(),
                          r->epsilon.fits_ulong_p() ? r->epsilon.get_ui() : 0,
                          ns});
      } else if (method == "fermat") {
        if (nv % 2 == 0) continue;
        const auto r = hyperfact::fermat_report(n);
        if (r)
          rows.push_back({nv, method, r->p.get_str(), r->q.get_str(),
                          r->iterations, r->elapsed.count()});
      } else if (method == "trial") {
        const auto r = hyperfact::trial_division_report(n);
        if (r)
          rows.push_back({nv, method, r->p.get_str(), r->q.get_str(),
                          r->iterations, r->elapsed.count()});
      } else {
        throw UsageRejection("unknown bench method: " + method);
      }
    }
  }

  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json obj;
      obj["n"] = r.n;
      obj["method"] = r.method;
      obj["p"] = r.p;
      obj["q"] = r.q;
      obj["iterations"] = r.iterations;
      obj["elapsed_ns"] = r.ns;
      arr.push_back(std::move(obj));
    }
    std::cout << arr.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "n,method,p,q,iterations,elapsed_ns\n";
    for (const auto& r : rows)
      std::cout << r.n << ',' << r.method << ',' << r.p << ',' << r.q << ','
                << r.iterations << ',' << r.ns << '\n';
  } else {
    for (const auto& r : rows)
      std::cout << r.n << " " << r.method << ": " << r.p << " × " << r.q
                << "  iterations=" << r.iterations << " elapsed_ns=" << r.ns
                << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hyperbola-based factorization toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  hyperfact::VerifyOptions vopts;
  std::vector<std::string> bench_methods = {"epsilon", "fermat", "trial"};
  std::string chain_moduli_csv;
  std::string i_max_text;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--workers", cfg.workers, "worker count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--seed", cfg.seed, "sampling seed");
  };

  auto* factor_cmd = app.add_subcommand("factor", "factor an odd composite n");
  factor_cmd->add_option("n", cfg.n_text, "the integer to factor")->required();
  factor_cmd->add_option("--method", cfg.method, "factoring method")
      ->check(CLI::IsMember({"epsilon", "chain", "fermat", "trial"}));
  factor_cmd->add_option("--epsilon-budget", cfg.eps_budget_text,
                         "epsilon search budget (default n/2)");
  add_common(factor_cmd);

  auto* enum_cmd =
      app.add_subcommand("enumerate", "list all integral points of B_n");
  enum_cmd->add_option("n", cfg.n_text, "curve parameter")->required();
  add_common(enum_cmd);

  auto* gamma_cmd =
      app.add_subcommand("scan-gamma", "scan the Gamma membership set");
  gamma_cmd->add_option("n", cfg.n_text, "odd modulus")->required();
  gamma_cmd->add_option("--i-max", i_max_text, "scan bound (default n)");
  add_common(gamma_cmd);

  auto* chain_cmd =
      app.add_subcommand("chain", "print the full stage-by-stage chain");
  chain_cmd->add_option("n", cfg.n_text, "odd composite")->required();
  add_common(chain_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  verify_cmd->add_option("--semiprimes-to", vopts.semiprimes_to,
                         "semiprime bound");
  verify_cmd->add_option("--prime-powers-to", vopts.prime_powers_to,
                         "prime-power bound");
  verify_cmd->add_option("--scan-to", vopts.scan_to, "brute-force scan bound");
  verify_cmd->add_option("--discriminant-to", vopts.discriminant_to,
                         "discriminant bound");
  verify_cmd->add_option("--system-to", vopts.system_to, "system-check bound");
  verify_cmd->add_option("--factor-to", vopts.factor_to,
                         "factor-equivalence bound");
  verify_cmd->add_option("--gamma-to", vopts.gamma_to, "gamma-scan bound");
  verify_cmd->add_option("--chain-samples", vopts.chain_samples,
                         "random samples per chain modulus");
  verify_cmd->add_option("--chain-moduli", chain_moduli_csv,
                         "comma-separated odd semiprimes");
  add_common(verify_cmd);

  auto* dataset_cmd =
      app.add_subcommand("dataset", "emit the per-semiprime table");
  dataset_cmd->add_option("--from", cfg.from, "range start")->required();
  dataset_cmd->add_option("--to", cfg.to, "range end (inclusive)")->required();
  dataset_cmd->add_option("--out", cfg.out_path, "output path ('-' for stdout)")
      ->required();
  add_common(dataset_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "compare search directions");
  bench_cmd->add_option("--n", cfg.n_text, "single target");
  bench_cmd->add_option("--to", cfg.to, "bench every odd semiprime below");
  bench_cmd->add_option("--methods", bench_methods, "methods to run")
      ->delimiter(',');
  add_common(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (factor_cmd->parsed()) return cmd_factor(cfg);
    if (enum_cmd->parsed()) return cmd_enumerate(cfg);
    if (gamma_cmd->parsed()) {
      if (!i_max_text.empty()) cfg.i_max = parse_natural(i_max_text);
      return cmd_scan_gamma(cfg);
    }
    if (chain_cmd->parsed()) return cmd_chain(cfg);
    if (verify_cmd->parsed()) {
      vopts.workers = cfg.workers;
      vopts.seed = cfg.seed;
      if (!chain_moduli_csv.empty()) {
        vopts.chain_moduli.clear();
        std::stringstream ss(chain_moduli_csv);
        std::string item;
        while (std::getline(ss, item, ','))
          vopts.chain_moduli.push_back(parse_natural(item).get_ui());
      }
      return cmd_verify(vopts, cfg.format);
    }
    if (dataset_cmd->parsed()) return cmd_dataset(cfg);
    if (bench_cmd->parsed()) return cmd_bench(cfg, bench_methods);
  } catch (const DomainRejection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UsageRejection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
