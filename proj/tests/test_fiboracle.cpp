#include "doctest.h"

#include <cmath>

#include "stewart/error.hpp"
#include "stewart/fiboracle.hpp"
#include "stewart/numtheory.hpp"

using namespace stewart;

namespace {

mpz_class gmp_fib(unsigned long n) {
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

TEST_SUITE("fiboracle") {
  TEST_CASE("fast doubling matches GMP") {
    for (unsigned long n = 0; n <= 3000; n += 7) {
      const auto [f, g] = fib_pair(n);
      REQUIRE(f == gmp_fib(n));
      REQUIRE(g == gmp_fib(n + 1));
      const mpz_class m = 1000003;
      const auto [fm, gm] = fib_pair(n, m);
      REQUIRE(fm == mpz_class(f % m));
      REQUIRE(gm == mpz_class(g % m));
      const auto [fu, gu] = fib_pair_u64(n, 4294967311ULL);
      REQUIRE(mpz_class(std::to_string(fu)) == mpz_class(f % 4294967311UL));
      REQUIRE(mpz_class(std::to_string(gu)) == mpz_class(g % 4294967311UL));
    }
  }

  TEST_CASE("rank of apparition examples") {
    CHECK(rank_of_apparition(2).alpha == 3);
    CHECK(rank_of_apparition(11).alpha == 10);
    CHECK(rank_of_apparition(13).alpha == 7);
    CHECK(rank_of_apparition(11).f_p == 1);
    CHECK(rank_of_apparition(13).f_p == 2);
    CHECK(rank_of_apparition(2).e0 == 1);
    for (std::uint64_t p = 2; p < 3000; ++p) {
      if (!is_prime(p) || p == 5) continue;
      const ApparitionRecord r = rank_of_apparition(p);
      std::uint64_t alpha = 1;
      while (gmp_fib(alpha) % p != 0) ++alpha;
      REQUIRE(r.alpha == alpha);
      if (p != 5) {
        const std::uint64_t period_divisor = r.f_p == 1 ? p - 1 : p + 1;
        REQUIRE(period_divisor % r.alpha == 0);
      }
    }
  }

  TEST_CASE("nu_p_fib matches direct valuation for n <= 2000, p <= 1000") {
    std::vector<mpz_class> fibs(2001);
    for (unsigned long n = 1; n <= 2000; ++n) fibs[n] = gmp_fib(n);
    for (std::uint64_t p = 2; p <= 1000; ++p) {
      if (!is_prime(p) || p == 5) continue;
      for (std::uint64_t n = 1; n <= 2000; ++n) {
        REQUIRE(nu_p_fib(p, n) == valuation(fibs[n], mpz_class(std::to_string(p))));
      }
    }
  }

  TEST_CASE("primitive divisor examples") {
    const PrimitiveDivisorSet s7 = primitive_divisors(7);
    REQUIRE(s7.divisors.size() == 1);
    CHECK(s7.divisors[0].p == 13);
    CHECK(s7.complete);
    CHECK(primitive_divisors(12).divisors.empty());
    CHECK(primitive_divisors(6).divisors.empty());
    CHECK(primitive_part(12) == 1);
    CHECK(primitive_part(7) == 13);
    CHECK(primitive_part(25) == gmp_fib(25) / 25);
  }

  TEST_CASE("primitive divisors exist and obey the sign rule for 7 <= n <= 200") {
    for (std::uint64_t n = 7; n <= 200; ++n) {
      const PrimitiveDivisorSet s = primitive_divisors(n);
      REQUIRE(s.complete);
      if (n == 12) continue;
      REQUIRE_FALSE(s.divisors.empty());
      mpz_class product = 1;
      for (const PrimitiveDivisor& d : s.divisors) {
        const mpz_class r = d.p % n;
        const int kronecker = d.p == 5 ? 0 : (d.p % 5 == 1 || d.p % 5 == 4 ? 1 : -1);
        if (kronecker == 1) REQUIRE(r == 1);
        if (kronecker == -1) REQUIRE(r == n - 1);
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), d.p.get_mpz_t(), static_cast<unsigned long>(d.exponent));
        product *= power;
      }
      REQUIRE(product == primitive_part(n));
    }
  }

  TEST_CASE("eliou check") {
    const EliouCheck e7 = eliou_check(7, primitive_divisors(7));
    CHECK(e7.lhs.mid() == doctest::Approx(std::log(13.0)));
    CHECK(e7.rhs.mid() == doctest::Approx(0.700).epsilon(1e-3));
    CHECK(e7.pass);
    CHECK(e7.in_regime);
    CHECK_FALSE(eliou_check(12, primitive_divisors(12)).in_regime);
    for (std::uint64_t n = 7; n <= 200; ++n) {
      if (n == 12) continue;
      REQUIRE(eliou_check(n, primitive_divisors(n)).pass);
    }
  }

  TEST_CASE("an unfactored primitive part is reported, not guessed") {
    try {
      primitive_divisors(211);
      FAIL("expected an incomplete factorization");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IncompleteFactorization);
    }
  }
}
