#include "doctest.h"

#include <random>

#include "stewart/error.hpp"
#include "stewart/quadfield.hpp"
#include "stewart/splitprimes.hpp"

using namespace stewart;

namespace {

// Smallest |b|, then smallest a >= 0, then positive norm, then positive b.
QuadInt brute_prime_above(long q) {
  for (long b = 1; b <= 1000; ++b) {
    for (long a = 0; a <= 1000; ++a) {
      for (const long sb : {b, -b}) {
        const QuadInt x{a, sb};
        if (x.norm() == q) return x;
      }
      for (const long sb : {b, -b}) {
        const QuadInt x{a, sb};
        if (x.norm() == -q) return x;
      }
    }
  }
  return {};
}

Interval log_eta() { return log(Interval::golden_ratio()); }

}  // namespace

TEST_SUITE("quadfield") {
  TEST_CASE("norm and conjugate examples") {
    auto [n1, c1] = norm_and_conj(QuadInt::eta());
    CHECK(n1 == -1);
    CHECK(c1 == QuadInt{1, -1});
    auto [n2, c2] = norm_and_conj(QuadInt{2, 0});
    CHECK(n2 == 4);
    CHECK(c2 == QuadInt{2, 0});
    auto [n3, c3] = norm_and_conj(QuadInt{3, 1});
    CHECK(n3 == 11);
    CHECK(c3 == QuadInt{4, -1});
    CHECK(QuadInt::gamma() == QuadInt{0, 0} - QuadInt::eta() * QuadInt::eta());
    CHECK(QuadInt::eta() * QuadInt::eta() == QuadInt::eta() + QuadInt{1, 0});
  }

  TEST_CASE("norm and conjugation are multiplicative on random elements") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coef(-1000000000L, 1000000000L);
    for (int i = 0; i < 10000; ++i) {
      const QuadInt x{coef(rng), coef(rng)}, y{coef(rng), coef(rng)};
      REQUIRE((x * y).norm() == x.norm() * y.norm());
      REQUIRE((x * y).conj() == x.conj() * y.conj());
      REQUIRE(x.conj().conj() == x);
      REQUIRE(x * x.conj() == QuadInt{x.norm(), 0});
    }
  }

  TEST_CASE("eta powers and exact division") {
    CHECK(eta_pow(0) == QuadInt{1, 0});
    CHECK(eta_pow(-1) == QuadInt{-1, 1});
    for (long e = -20; e <= 20; ++e) REQUIRE(eta_pow(e) * eta_pow(-e) == QuadInt{1, 0});
    CHECK(pow(QuadInt::eta(), 10) == eta_pow(10));
    const QuadInt x{3, 1}, y{7, -2};
    CHECK(exact_div(x * y, y) == x);
    CHECK_FALSE(exact_div(QuadInt{1, 0}, QuadInt{2, 0}).has_value());
    CHECK_THROWS_AS(exact_div(x, QuadInt{}), Error);
    CHECK(valuation(QuadInt{3, 1} * QuadInt{3, 1} * QuadInt{5, 0}, QuadInt{3, 1}) == 2);
    CHECK(abs(gcd(QuadInt{3, 1} * QuadInt{2, 0}, QuadInt{3, 1} * QuadInt{7, 0}).norm()) == 11);
  }

  TEST_CASE("split_type") {
    CHECK(split_type(11) == 1);
    CHECK(split_type(19) == 1);
    CHECK(split_type(13) == 2);
    CHECK(split_type(2) == 2);
    CHECK_THROWS_AS(split_type(5), Error);
    try {
      split_type(5);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RamifiedPrime);
    }
    try {
      split_type(21);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPrime);
    }
  }

  TEST_CASE("prime_above examples and brute-force oracle") {
    CHECK(prime_above(11) == QuadInt{3, 1});
    CHECK(prime_above(19) == QuadInt{4, 1});
    CHECK(prime_above(29) == QuadInt{5, 1});
    const SplitPrimeTable table = enumerate_split_primes_upto(5000);
    for (const std::uint64_t q : table.primes()) {
      REQUIRE(prime_above(q) == brute_prime_above(static_cast<long>(q)));
    }
    try {
      prime_above(13);
      FAIL("inert prime accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotSplit);
    }
  }

  TEST_CASE("prime_above over split q <= 10^5: norm +-q, conjugates distinct") {
    const SplitPrimeTable table = enumerate_split_primes_upto(100000);
    for (const std::uint64_t q : table.primes()) {
      const QuadInt pi = prime_above(q);
      REQUIRE(abs(pi.norm()) == q);
      REQUIRE_FALSE(divides(pi, pi.conj()));
    }
  }

  TEST_CASE("theta_2 matches the worked example") {
    const SplitPrimeTable table = enumerate_split_primes_count(4);
    const QuadUnitFraction theta = theta_generator(2, table);
    CHECK(theta.numerator == QuadInt{3, 1});
    CHECK(theta.denominator == QuadInt{4, -1});
    CHECK(theta.unit_exponent == -1);
    CHECK(theta.embed().mid() == doctest::Approx(0.7406).epsilon(1e-4));
    CHECK(theta.embed_conj().mid() == doctest::Approx(1.3502).epsilon(1e-4));
  }

  TEST_CASE("theta_k over q_k <= 10^5: norm 1, embeddings in [1/eta, eta], height bound") {
    const SplitPrimeTable table = enumerate_split_primes_upto(100000);
    const Interval eta = Interval::golden_ratio();
    const Interval slack = Interval::from_decimal("1e-30");
    const Interval lo = Interval::from_int(1) / eta - slack, hi = eta + slack;
    for (int k = 2; k <= table.max_index(); ++k) {
      const QuadUnitFraction theta = theta_generator(k, table);
      REQUIRE(theta.norm() == 1);
      for (const Interval& v : {theta.embed(), theta.embed_conj()}) {
        REQUIRE(certainly_less_equal(lo, v));
        REQUIRE(certainly_less_equal(v, hi));
      }
      const Interval bound = log(eta * Interval::from_int(static_cast<long>(table.at(k)))) / Interval::from_int(2);
      REQUIRE(certainly_less_equal(height(theta).value, bound));
    }
  }

  TEST_CASE("heights") {
    const Interval h_gamma = height(QuadInt::gamma()).value;
    CHECK(h_gamma.lower() <= log_eta().upper());
    CHECK(h_gamma.upper() >= log_eta().lower());
    const Interval h_eta = height(QuadInt::eta()).value;
    CHECK(h_eta.mid() == doctest::Approx(log_eta().mid() / 2));
    CHECK(height(QuadInt{2, 0}).value.mid() == doctest::Approx(std::log(2.0)));
    CHECK(height(QuadInt{1, 0}).value.upper() == 0);
    CHECK_THROWS_AS(height(QuadInt{}), Error);
    const Interval half_log_eta = log_eta() / Interval::from_int(2);
    for (long a = -15; a <= 15; ++a) {
      for (long b = -15; b <= 15; ++b) {
        const QuadInt x{a, b};
        if (x.is_zero() || x == QuadInt{1, 0} || x == QuadInt{-1, 0}) continue;
        REQUIRE(certainly_less_equal(half_log_eta - Interval::from_decimal("1e-35"), height(x).value));
      }
    }
  }
}
