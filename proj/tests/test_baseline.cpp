#include <doctest.h>

#include "hyperfact/baseline.hpp"
#include "hyperfact/epsilon.hpp"

using namespace hyperfact;

TEST_CASE("trial division") {
  auto r = trial_division(Int(91));
  REQUIRE(r.has_value());
  CHECK(r->first == 7);
  CHECK(r->second == 13);

  CHECK_FALSE(trial_division(Int(17)).has_value());
  r = trial_division(Int(15));
  REQUIRE(r.has_value());
  CHECK(r->first == 3);
  CHECK(r->second == 5);

  r = trial_division(Int(45));
  REQUIRE(r.has_value());
  CHECK(r->first == 3);
  CHECK(r->second == 15);  // cofactor need not be prime

  r = trial_division(Int(1024));
  CHECK(r->first == 2);
  CHECK_THROWS_AS(trial_division(Int(1)), std::domain_error);
}

TEST_CASE("fermat frozen examples") {
  auto r = fermat(Int(5959));
  REQUIRE(r.has_value());
  CHECK(r->p == 59);
  CHECK(r->q == 101);
  CHECK(r->s == 160);  // 160^2 - 4*5959 = 1764 = 42^2

  r = fermat(Int(15));
  REQUIRE(r.has_value());
  CHECK(r->p == 3);
  CHECK(r->q == 5);
  CHECK(r->s == 8);

  r = fermat(Int(21));
  REQUIRE(r.has_value());
  CHECK(r->p == 3);
  CHECK(r->q == 7);
  CHECK(r->s == 10);  // 100 - 84 = 16

  r = fermat(Int(9));
  REQUIRE(r.has_value());
  CHECK(r->p == 3);
  CHECK(r->q == 3);
  CHECK(r->s == 6);

  CHECK_THROWS_AS(fermat(Int(10)), std::domain_error);
  CHECK_FALSE(fermat(Int(7)).has_value());
}

TEST_CASE("reports carry counters") {
  const auto rep = fermat_report(Int(5959));
  REQUIRE(rep.has_value());
  CHECK(rep->n == 5959);
  CHECK(rep->p * rep->q == 5959);
  CHECK(rep->iterations >= 1);
  CHECK(rep->elapsed.count() >= 0);

  const auto td = trial_division_report(Int(5959));
  REQUIRE(td.has_value());
  CHECK(td->p == 59);
  CHECK(td->iterations >= 1);
  CHECK_FALSE(trial_division_report(Int(101)).has_value());
}

TEST_CASE("fermat agrees with the epsilon search on semiprimes") {
  for (const auto& sp : odd_semiprimes_below(2000)) {
    const Int n(sp.n);
    const auto fm = fermat(n);
    const auto eps = epsilon_factor(n);
    REQUIRE(fm.has_value());
    REQUIRE(eps.has_value());
    CHECK(fm->p == sp.p);
    CHECK(fm->q == sp.q);
    CHECK(fm->p == eps->q);
    CHECK(fm->q == eps->p);
    CHECK(fm->s == n - 1 - 2 * eps->epsilon);

    const auto td = trial_division(n);
    REQUIRE(td.has_value());
    CHECK(td->first == fm->p);
    CHECK(td->second == fm->q);
  }
}

TEST_CASE("mpz fallback path agrees with the fast path") {
  // balanced semiprime beyond the u64 fast-path cutoff
  const Int n = Int(65537) * Int(65539);  // 4295229443
  const auto r = fermat(n);
  REQUIRE(r.has_value());
  CHECK(r->p == 65537);
  CHECK(r->q == 65539);
  CHECK(r->s == 131076);
}
