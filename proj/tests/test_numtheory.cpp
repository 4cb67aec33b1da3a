#include "doctest.h"

#include <random>

#include "stewart/numtheory.hpp"

using namespace stewart;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("numtheory") {
  TEST_CASE("is_prime matches trial division below 10^5") {
    for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == trial_prime(n));
  }

  TEST_CASE("is_prime on strong pseudoprimes and large primes") {
    CHECK_FALSE(is_prime(3215031751ULL));       // spsp to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));
    CHECK(is_prime(18446744073709551557ULL));   // largest 64-bit prime
    CHECK(is_prime(3375517771ULL));
  }

  TEST_CASE("factor reconstructs its input") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t n = rng() >> (i % 40);
      if (n == 0) continue;
      std::uint64_t product = 1;
      for (const auto& [p, e] : factor(n)) {
        REQUIRE(is_prime(p));
        for (int j = 0; j < e; ++j) product *= p;
      }
      REQUIRE(product == n);
    }
    CHECK(factor(1).empty());
  }

  TEST_CASE("multiplicative functions") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    for (std::uint64_t n = 1; n <= 500; ++n) {
      std::uint64_t sum = 0;
      for (const std::uint64_t d : divisors(n)) sum += euler_phi(d);
      REQUIRE(sum == n);
    }
  }

  TEST_CASE("legendre5 follows residues mod 5") {
    CHECK(legendre5(11) == 1);
    CHECK(legendre5(19) == 1);
    CHECK(legendre5(13) == -1);
    CHECK(legendre5(7) == -1);
    CHECK(legendre5(2) == -1);
  }

  TEST_CASE("classify_prime and factor_big") {
    CHECK(classify_prime(mpz_class(97)) == Primality::Prime);
    CHECK(classify_prime(mpz_class(91)) == Primality::Composite);
    const mpz_class m127 = (mpz_class(1) << 127) - 1;
    CHECK(classify_prime(m127) == Primality::ProbablePrime);
    const BigFactorization f = factor_big(mpz_class("1000000016000000063"));  // 1000000007 * 1000000009
    CHECK(f.complete);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 1000000007);
    CHECK(f.factors[1].first == 1000000009);
    CHECK(valuation(mpz_class(1) << 40, mpz_class(2)) == 40);
    CHECK(valuation(std::uint64_t{96}, std::uint64_t{2}) == 5);
  }
}
