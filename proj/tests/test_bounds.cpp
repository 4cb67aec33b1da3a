#include "doctest.h"

#include <array>
#include <cmath>

#include "stewart/bounds.hpp"
#include "stewart/error.hpp"

using namespace stewart;

namespace {

const SplitPrimeTable& table() {
  static const SplitPrimeTable t = enumerate_split_primes_upto(1000);
  return t;
}

constexpr std::array<std::pair<long, std::int64_t>, 10> kSmallKappa{
    {{1, 7607}, {2, 8006}, {3, 8257}, {4, 8443}, {5, 8588}, {6, 8710}, {7, 8815}, {8, 8904}, {9, 8984}, {10, 9057}}};
const std::array<std::pair<const char*, std::int64_t>, 9> kLargeKappa{{{"20", 9544},
                                                                        {"30", 9831},
                                                                        {"40", 10036},
                                                                        {"50", 10196},
                                                                        {"100", 10701},
                                                                        {"1000", 12405},
                                                                        {"10000", 14121},
                                                                        {"100000", 15841},
                                                                        {"1000000", 17575}}};

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("Theta_2 and log Theta") {
    CHECK(theta_cap(2, table()).mid() == doctest::Approx(11.0601784431408).epsilon(1e-13));
    for (int k = 2; k <= 78; ++k) {
      const Interval direct = log(theta_cap(k, table()));
      const Interval fast = log_theta_cap(k, table());
      REQUIRE(fast.mid() == doctest::Approx(direct.mid()).epsilon(1e-15));
      REQUIRE_FALSE(certainly_less(fast, direct));
      REQUIRE_FALSE(certainly_less(direct, fast));
    }
  }

  TEST_CASE("both forms of Lambda agree") {
    for (int k = 8; k <= 78; k += 5) {
      for (const long kappa : {1L, 7L, 1000000L}) {
        const BoundParams params{kappa, k, Precision{256}};
        const Interval theta = theta_cap(k, table(), Precision{256});
        const Interval a = lambda_bound(params, theta), b = lambda_bound_expanded(params, theta);
        REQUIRE(std::fabs(a.mid() - b.mid()) <= std::ldexp(a.mid(), -100) + 1e-300);
      }
    }
  }

  TEST_CASE("small-kappa table") {
    for (const auto& [kappa, n0] : kSmallKappa) {
      CHECK(n0_optimize(kappa).n0 == n0);
    }
  }

  TEST_CASE("large-kappa table") {
    for (const auto& [kappa, n0] : kLargeKappa) {
      const BoundResult r = n0_optimize(mpz_class(kappa));
      CHECK(r.n0 == n0);
      CHECK(r.validity.k_ge_8);
      CHECK_FALSE(r.validity.beyond_table_range);
    }
    CHECK(n0_optimize(mpz_class("1000001")).validity.beyond_table_range);
  }

  TEST_CASE("worked example at kappa = 1, k = 22") {
    const BoundResult r = evaluate_at_k(1, 22, table());
    CHECK(r.log_n_bound < 7606.3);
    CHECK(r.log_n_bound == doctest::Approx(7606.29881).epsilon(1e-8));
    CHECK(r.n0 == 7607);
  }

  TEST_CASE("the optimizer picks the scan minimum") {
    const BoundResult best = n0_optimize(5);
    REQUIRE(best.scan.size() == 71);
    for (const KScanRow& row : best.scan) {
      REQUIRE(row.dsn >= best.log_n_bound);
      if (row.k < best.k) REQUIRE(row.dsn > best.log_n_bound);
    }
    const BoundResult serial = n0_optimize(5, OptimizeOptions{std::nullopt, kDefaultPrecision, 1});
    CHECK(serial == best);
  }

  TEST_CASE("n0 is stable under higher precision") {
    for (const long kappa : {1L, 10L, 1000L}) {
      CHECK(n0_optimize(kappa).n0 == n0_optimize(kappa, OptimizeOptions{std::nullopt, Precision{256}, 0}).n0);
    }
  }

  TEST_CASE("hypothesis checks") {
    CHECK_THROWS_AS(n0_optimize(0), Error);
    CHECK_THROWS_AS(evaluate_at_k(1, 7, table()), Error);
    CHECK_THROWS_AS(lna_bound(Interval::from_int(2), Interval::from_int(100)), Error);
    CHECK_THROWS_AS(lna_bound(Interval::from_int(0), Interval::from_int(100)), Error);
    CHECK_THROWS_AS(lna_bound(Interval::from_decimal("0.5"), Interval::from_decimal("1.1")), Error);
    const Interval v = lna_bound(Interval::from_decimal("0.5"), Interval::from_int(100));
    CHECK(v.mid() == doctest::Approx(100 * std::sqrt(2 * std::log(100.0))));
  }

  TEST_CASE("C(k) decreases and C(500000) < 2.72") {
    CHECK(big_kappa_c(500000).upper() < 2.72);
    CHECK(big_kappa_c(500000).mid() == doctest::Approx(2.71861).epsilon(1e-5));
    double prev = big_kappa_c(1000).upper();
    for (const std::int64_t k : {2000, 10000, 100000, 500000, 1000000}) {
      const double cur = big_kappa_c(k).upper();
      REQUIRE(cur < prev);
      prev = cur;
    }
  }

  TEST_CASE("large-kappa chain") {
    const BigKappaReport r = bigkappa_bound(Interval::from_int(250000));
    CHECK(r.pass);
    for (const ChainLink& link : r.links) CHECK_MESSAGE(link.pass, link.name);
    const BigKappaReport sym = bigkappa_bound(Interval::from_int(250000), BigKappaOptions{kDefaultPrecision, 0, {}});
    CHECK(sym.pass);
  }

  TEST_CASE("Yu constants") {
    CHECK(yu_prime_floor(8).get_d() == doctest::Approx(std::exp(24.0) * 512).epsilon(1e-12));
    const YuCheckReport r = yu_constants_check(8);
    for (const YuInequality& q : r.results) {
      if (q.f_p == 1 && q.name == "log_p_vs_kprime") {
        CHECK_FALSE(q.pass);
      } else {
        CHECK_MESSAGE(q.pass, q.name, " f_p=", q.f_p);
      }
    }
    for (int k = 8; k <= 1000; k += 97) {
      for (const YuInequality& q : yu_constants_check(k).results) {
        if (q.f_p != 1) REQUIRE_MESSAGE(q.pass, q.name, " k=", k);
      }
    }
  }

  TEST_CASE("order bound") {
    const Interval theta = theta_cap(8, table());
    const mpz_class floor = yu_prime_floor(8);
    mpz_class p = floor;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const Interval at_floor = prop_order_bound(p, 1000, 8, theta);
    CHECK(at_floor.upper() < INFINITY);
    mpz_class q = p * 2;
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    CHECK(certainly_less(at_floor, prop_order_bound(q, 1000, 8, theta)));
    CHECK_THROWS_AS(prop_order_bound(p, 1000, 7, theta), Error);
    CHECK_THROWS_AS(prop_order_bound(mpz_class(101), 1000, 8, theta), Error);
    CHECK_THROWS_AS(prop_order_bound(p * 3, 1000, 8, theta), Error);
  }
}
