#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "hyperfact/dataset.hpp"
#include "hyperfact/verify.hpp"

using namespace hyperfact;

TEST_CASE("dataset rows for 15..35") {
  const auto rows = dataset_rows(15, 35);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 15);
  CHECK(rows[1].n == 21);
  CHECK(rows[2].n == 33);
  CHECK(rows[3].n == 35);

  CHECK(rows[0].p == 3);
  CHECK(rows[0].q == 5);
  CHECK(rows[0].epsilon == 3);
  CHECK(rows[0].hyper_x == 188);
  CHECK(rows[0].hyper_y == 8640);
  CHECK(rows[0].conjecture_holds);

  CHECK(rows[3].hyper_x == 572);
  CHECK(rows[3].epsilon == 11);
}

TEST_CASE("dataset csv golden output") {
  std::ostringstream out;
  write_dataset_csv(out, dataset_rows(15, 21));
  CHECK(out.str() ==
        "n,p,q,epsilon,k,sum_pq,phi,hyper_x,hyper_y,f1_at_eps,conjecture_holds\n"
        "15,3,5,3,24,8,8,188,8640,4,true\n"
        "21,3,7,5,32,10,12,304,21504,16,true\n");
}

TEST_CASE("dataset empty range is header-only") {
  std::ostringstream out;
  write_dataset_csv(out, dataset_rows(16, 20));
  CHECK(out.str() ==
        "n,p,q,epsilon,k,sum_pq,phi,hyper_x,hyper_y,f1_at_eps,conjecture_holds\n");
}

TEST_CASE("dataset json shape and key order") {
  std::ostringstream out;
  write_dataset_json(out, dataset_rows(15, 15));
  const auto parsed = nlohmann::ordered_json::parse(out.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  const auto& row = parsed[0];
  std::vector<std::string> keys;
  for (auto it = row.begin(); it != row.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "p", "q", "epsilon", "k", "sum_pq",
                                         "phi", "hyper_x", "hyper_y",
                                         "f1_at_eps", "conjecture_holds"});
  CHECK(row["n"] == 15);
  CHECK(row["epsilon"] == "3");
  CHECK(row["conjecture_holds"] == true);
}

TEST_CASE("dataset output is byte-identical across worker counts") {
  std::ostringstream serial, parallel;
  write_dataset_csv(serial, dataset_rows(15, 401, 1));
  write_dataset_csv(parallel, dataset_rows(15, 401, 4));
  CHECK(serial.str() == parallel.str());

  std::ostringstream json1, json4;
  write_dataset_json(json1, dataset_rows(15, 201, 1));
  write_dataset_json(json4, dataset_rows(15, 201, 4));
  CHECK(json1.str() == json4.str());
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("with,comma") == "\"with,comma\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("verify passes on a small range") {
  VerifyOptions opts;
  opts.semiprimes_to = 120;
  opts.prime_powers_to = 120;
  opts.scan_to = 40;
  opts.discriminant_to = 25;
  opts.system_to = 120;
  opts.factor_to = 300;
  opts.gamma_to = 120;
  opts.chain_moduli = {15, 21};
  opts.chain_samples = 4;
  const auto suites = run_verify(opts);
  REQUIRE(suites.size() == 8);
  for (const auto& s : suites) {
    INFO(s.suite);
    CHECK(s.pass());
    CHECK(s.checks_run > 0);
    for (const auto& f : s.failures) {
      INFO(f.name, " ", f.detail);
      CHECK(false);
    }
  }
}

TEST_CASE("verify is deterministic across worker counts") {
  VerifyOptions opts;
  opts.semiprimes_to = 60;
  opts.prime_powers_to = 60;
  opts.scan_to = 30;
  opts.discriminant_to = 12;
  opts.system_to = 60;
  opts.factor_to = 120;
  opts.gamma_to = 60;
  opts.chain_moduli = {15};
  opts.chain_samples = 3;

  auto run = [&](unsigned workers) {
    auto o = opts;
    o.workers = workers;
    std::ostringstream repr;
    for (const auto& s : run_verify(o)) {
      repr << s.suite << ':' << s.checks_run << ':' << s.pass();
      for (const auto& f : s.failures) repr << ';' << f.name;
      for (const auto& note : s.notes) repr << ';' << note;
      repr << '\n';
    }
    return repr.str();
  };
  CHECK(run(1) == run(4));
}
