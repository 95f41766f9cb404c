// End-to-end checks of the installed CLI surface: flags, exit codes, and
// machine-readable output. The binary path arrives via HYPERFACT_BIN.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

const char* binary_path() { return std::getenv("HYPERFACT_BIN"); }

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(binary_path()) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli factor text output and exit codes") {
  if (!binary_path()) {
    MESSAGE("HYPERFACT_BIN not set; skipping CLI tests");
    return;
  }

  auto r = run_cli("factor 15");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "15 = 3 × 5 (epsilon=3)"));

  r = run_cli("factor 5959 --method fermat");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "5959 = 59 × 101"));

  r = run_cli("factor 91 --method trial");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "91 = 7 × 13"));

  r = run_cli("factor 17");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "prime"));

  r = run_cli("factor 22");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "even"));

  r = run_cli("factor abc");
  CHECK(r.exit_code == 2);

  r = run_cli("factor");
  CHECK(r.exit_code == 2);

  r = run_cli("factor 15 --method nonsense");
  CHECK(r.exit_code == 2);

  // budget below the true epsilon misses the factorization
  r = run_cli("factor 15 --epsilon-budget 2");
  CHECK(r.exit_code == 1);
  r = run_cli("factor 15 --epsilon-budget 3");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli factor json output") {
  if (!binary_path()) return;
  const auto r = run_cli("factor 5959 --format json");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.output);
  CHECK(parsed["n"] == "5959");
  CHECK(parsed["p"] == "59");
  CHECK(parsed["q"] == "101");
  CHECK(parsed["method"] == "epsilon");
  CHECK(parsed["epsilon"] == "2899");
}

TEST_CASE("cli enumerate") {
  if (!binary_path()) return;
  const auto r = run_cli("enumerate 15");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "total: 18"));
  CHECK(contains(r.output, "region x>=4n, y>=0: 5"));
  CHECK(contains(r.output, "(256, 224)"));
  CHECK(contains(r.output, "(match)"));

  const auto rj = run_cli("enumerate 8 --format json");
  const auto parsed = nlohmann::json::parse(rj.output);
  CHECK(parsed["total"] == 14);

  const auto rc = run_cli("enumerate 8 --format csv");
  CHECK(rc.exit_code == 0);
  CHECK(contains(rc.output, "x,y\n"));
  CHECK(contains(rc.output, "32,0"));
}

TEST_CASE("cli scan-gamma and chain") {
  if (!binary_path()) return;
  auto r = run_cli("scan-gamma 15");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "conjecture holds"));
  CHECK(contains(r.output, "epsilon1 = 3"));

  r = run_cli("chain 15");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "R_n: (188, 8640)"));
  CHECK(contains(r.output, "J_Q: (188, 66560)"));
  CHECK(contains(r.output, "657250272/2209"));  // exact num/den rendering
  CHECK(contains(r.output, "roots: {80, 108}"));
}

TEST_CASE("cli verify") {
  if (!binary_path()) return;
  const auto r = run_cli(
      "verify --semiprimes-to 60 --prime-powers-to 60 --scan-to 30 "
      "--discriminant-to 12 --system-to 60 --factor-to 100 --gamma-to 60 "
      "--chain-moduli 15 --chain-samples 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[PASS] cardinality"));
  CHECK(contains(r.output, "all suites passed"));

  const auto rj = run_cli(
      "verify --semiprimes-to 40 --prime-powers-to 40 --scan-to 20 "
      "--discriminant-to 8 --system-to 40 --factor-to 60 --gamma-to 40 "
      "--chain-moduli 15 --chain-samples 2 --format json");
  CHECK(rj.exit_code == 0);
  const auto parsed = nlohmann::json::parse(rj.output);
  CHECK(parsed["pass"] == true);
  CHECK(parsed["suites"].size() == 8);
}

TEST_CASE("cli dataset file output and io failure") {
  if (!binary_path()) return;
  const std::string path = "cli_dataset_test.csv";
  auto r = run_cli("dataset --from 15 --to 35 --out " + path);
  CHECK(r.exit_code == 0);
  {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header ==
          "n,p,q,epsilon,k,sum_pq,phi,hyper_x,hyper_y,f1_at_eps,conjecture_holds");
    CHECK(first == "15,3,5,3,24,8,8,188,8640,4,true");
  }
  std::remove(path.c_str());

  r = run_cli("dataset --from 15 --to 35 --out /nonexistent-dir/out.csv");
  CHECK(r.exit_code == 3);
}

TEST_CASE("cli workers flag and env default keep output identical") {
  if (!binary_path()) return;
  const auto serial = run_cli("dataset --from 15 --to 301 --out - --workers 1");
  const auto parallel = run_cli("dataset --from 15 --to 301 --out - --workers 4");
  CHECK(serial.exit_code == 0);
  CHECK(serial.output == parallel.output);

  // no --workers flag: falls back to HYPERFACT_WORKERS or 1
  const auto defaulted = run_cli("dataset --from 15 --to 301 --out -");
  CHECK(defaulted.output == serial.output);
}

TEST_CASE("cli bench csv") {
  if (!binary_path()) return;
  const auto r = run_cli("bench --n 5959 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "n,method,p,q,iterations,elapsed_ns"));
  CHECK(contains(r.output, "5959,epsilon,59,101,2899,"));
  CHECK(contains(r.output, "5959,fermat,59,101,6,"));
}
