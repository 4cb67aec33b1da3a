#include "doctest.h"

#include <cmath>

#include "stewart/cyclotomic.hpp"
#include "stewart/numtheory.hpp"

using namespace stewart;

TEST_SUITE("cyclotomic") {
  TEST_CASE("small values") {
    const CyclotomicValue p1 = phi_eval_exact(1);
    CHECK(p1.value == QuadInt{-2, -1});
    CHECK(p1.norm == 5);
    const CyclotomicValue p2 = phi_eval_exact(2);
    CHECK(p2.is_unit);
    CHECK(p2.value == QuadInt{0, -1});
    CHECK_FALSE(phi_eval_exact(3).is_unit);
  }

  TEST_CASE("|norm(gamma^n - 1)| = 5 F_n^2 for n <= 200") {
    for (unsigned long n = 1; n <= 200; ++n) {
      mpz_class f;
      mpz_fib_ui(f.get_mpz_t(), n);
      REQUIRE(abs(gamma_pow_minus_one(n).norm()) == 5 * f * f);
    }
  }

  TEST_CASE("product of Phi_d(gamma) over d | n is gamma^n - 1") {
    for (std::uint64_t n = 1; n <= 120; ++n) {
      QuadInt product{1, 0};
      for (const std::uint64_t d : divisors(n)) product *= phi_eval_exact(d).value;
      REQUIRE(product == gamma_pow_minus_one(n));
    }
  }

  TEST_CASE("esum identity") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      const EsumCheck e = esum_identity_check(n);
      REQUIRE(e.delta_ok);
      REQUIRE(e.delta.upper() < 1e-20);
    }
    const EsumCheck e5 = esum_identity_check(5);
    CHECK(e5.remainder.mid() == doctest::Approx(-0.63).epsilon(0.01));
    CHECK_FALSE(e5.remainder_ok);
  }

  TEST_CASE("log |Phi_n(1/gamma)| against double evaluation") {
    const double g = -1.0 / (1.6180339887498949 * 1.6180339887498949);
    for (std::uint64_t n = 1; n <= 60; ++n) {
      double s = 0;
      for (const std::uint64_t m : divisors(n)) {
        s += mobius(n / m) * std::log(std::fabs(1 - std::pow(g, static_cast<double>(m))));
      }
      REQUIRE(log_abs_phi_at_inverse_gamma(n).mid() == doctest::Approx(s).epsilon(1e-12));
    }
  }

  TEST_CASE("Schwarz sweep: serial and parallel agree, modulus bound holds") {
    const SchwarzReport serial = schwarz_bound_check_serial(2000);
    const SchwarzReport parallel = schwarz_bound_check(2000, kDefaultPrecision, 4);
    CHECK(serial == parallel);
    CHECK(serial.bound.mid() == doctest::Approx(0.2340).epsilon(1e-3));
    CHECK(serial.modulus_bound.mid() == doctest::Approx(0.7786).epsilon(1e-3));
    CHECK(serial.within_modulus_bound);
    CHECK(serial.argmax == 2);
    CHECK(serial.max_value.mid() == doctest::Approx(0.4812).epsilon(1e-3));
    CHECK_FALSE(serial.below_024);
  }

  TEST_CASE("Schinzel valuations") {
    const SchinzelReport s12 = schinzel_check(12);
    CHECK(s12.pass);
    CHECK_FALSE(s12.excluded);
    CHECK(schinzel_check(6).excluded);
    const SchinzelReport s5 = schinzel_check(5);
    REQUIRE(s5.entries.size() == 1);
    CHECK(s5.entries[0].ramified);
    CHECK(s5.entries[0].valuation == 2);
    CHECK(s5.entries[0].nu_p_n == 1);
    for (std::uint64_t n = 2; n <= 200; ++n) {
      if (n == 5 || n == 6) continue;
      const SchinzelReport r = schinzel_check(n);
      for (const SchinzelEntry& e : r.entries) REQUIRE(e.pass);
    }
  }
}
