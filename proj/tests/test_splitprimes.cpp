#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "stewart/error.hpp"
#include "stewart/interval.hpp"
#include "stewart/numtheory.hpp"
#include "stewart/splitprimes.hpp"

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

TEST_SUITE("splitprimes") {
  TEST_CASE("first entries") {
    const SplitPrimeTable t = enumerate_split_primes_count(4);
    CHECK(std::vector<std::uint64_t>(t.primes().begin(), t.primes().end()) == std::vector<std::uint64_t>{11, 19, 29, 31});
    CHECK(t.at(2) == 11);
    CHECK(t.at(5) == 31);
    CHECK_THROWS_AS(t.at(6), Error);
    const SplitPrimeTable u = enumerate_split_primes_upto(31);
    CHECK(std::vector<std::uint64_t>(u.primes().begin(), u.primes().end()) == std::vector<std::uint64_t>{11, 19, 29, 31});
    CHECK(u.index_of(29) == 4);
    CHECK_FALSE(u.index_of(13).has_value());
  }

  TEST_CASE("split primes below 1000 number 78") {
    CHECK(enumerate_split_primes_upto(999).size() == 78);
  }

  TEST_CASE("counts match a trial-division oracle up to 10^6") {
    const SplitPrimeTable t = enumerate_split_primes_upto(1000000, SieveConfig{1 << 12, 0});
    std::size_t count = 0;
    std::size_t next_check = 1000;
    for (std::uint64_t x = 2; x <= 1000000; ++x) {
      if ((x % 5 == 1 || x % 5 == 4) && trial_prime(x)) ++count;
      if (x == next_check) {
        REQUIRE(t.count_up_to(x) == count);
        next_check = next_check * 3 / 2;
      }
    }
    CHECK(t.size() == count);
  }

  TEST_CASE("serial and parallel sieves agree") {
    std::vector<std::uint64_t> a, b;
    const SieveConfig small{1 << 10, 0};
    sieve_split_primes_serial(123456, 2345678, small, [&](std::span<const std::uint64_t> p, std::uint64_t) {
      a.insert(a.end(), p.begin(), p.end());
      return true;
    });
    sieve_split_primes(123456, 2345678, SieveConfig{1 << 10, 4}, [&](std::span<const std::uint64_t> p, std::uint64_t) {
      b.insert(b.end(), p.begin(), p.end());
      return true;
    });
    CHECK(a == b);
    CHECK(a.front() >= 123456);
    CHECK(a.back() < 2345678);
  }

  TEST_CASE("verify_qk_bound examples") {
    const QkReport small = verify_qk_bound({2, 10, "1.3"});
    CHECK_FALSE(small.pass);
    CHECK(small.first_fail_k == 2);
    CHECK(small.first_fail_q == 11);
    const QkReport single = verify_qk_bound({500000, 500000, "1.3"});
    CHECK(single.pass);
    CHECK(single.checked == 1);
    CHECK(single.last_q == 15490039);
    CHECK_THROWS_AS(verify_qk_bound({1, 10, "1.3"}), Error);
    CHECK_THROWS_AS(verify_qk_bound({2, 10, "1"}), Error);
  }

  TEST_CASE("fast and reference verifiers agree") {
    for (const char* exponent : {"1.3", "1.25", "1.2"}) {
      const QkQuery q{20000, 60000, exponent};
      const QkReport fast = verify_qk_bound(q, SieveConfig{1 << 12, 0});
      const QkReport ref = verify_qk_bound_reference(q);
      CHECK(fast == ref);
    }
  }

  TEST_CASE("resuming from a progress point continues the count") {
    const QkQuery q{500000, 540000, "1.3"};
    const SplitPrimeTable t = enumerate_split_primes_count(540000);
    const QkProgress mid{t.at(510000), 510000};
    const QkReport full = verify_qk_bound(q, SieveConfig{1 << 10, 0});
    const QkReport rest = verify_qk_bound(q, SieveConfig{1 << 10, 0}, mid);
    REQUIRE(full.pass);
    CHECK(rest.pass);
    CHECK(full.last_q == rest.last_q);
    CHECK(rest.checked == full.checked - (mid.next_k - q.k_from));
  }

  TEST_CASE("x^0.3 - eta (2 log x)^1.3 is increasing and positive where the prime-counting step needs it") {
    const double eta = 1.6180339887498949;
    auto f = [&](double x) { return std::pow(x, 0.3) - eta * std::pow(2 * std::log(x), 1.3); };
    // Decreasing below about 1.6e5, so monotonicity is only claimed from there on.
    CHECK(f(77) < f(76));
    double prev = f(1.6e5);
    for (double x = 1.6e5 * 1.01; x <= 1e12; x *= 1.01) {
      const double cur = f(x);
      REQUIRE(cur > prev);
      prev = cur;
    }
    CHECK(f(3375517771.0) > 0);
  }

  TEST_CASE("cache round-trip and validation") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "stewart_cache_test";
    fs::create_directories(dir);
    const fs::path path = dir / "split.txt";
    const SplitPrimeTable t = enumerate_split_primes_upto(200000);
    write_split_prime_cache(t, path);
    const SplitPrimeTable back = read_split_prime_cache(path);
    CHECK(std::vector<std::uint64_t>(back.primes().begin(), back.primes().end()) ==
          std::vector<std::uint64_t>(t.primes().begin(), t.primes().end()));
    CHECK(back.complete_to() == t.complete_to());
    {
      std::ofstream out(path, std::ios::app);
      out << "199999\n";
    }
    CHECK_THROWS_AS(read_split_prime_cache(path), Error);
    {
      std::ofstream out(path, std::ios::trunc);
      out << "SPLITPRIMES v9 100\n11\n";
    }
    CHECK_THROWS_AS(read_split_prime_cache(path), Error);
    fs::remove_all(dir);
  }

  TEST_CASE("index of 3375517771 is 80802434" * doctest::skip(std::getenv("STEWART_LONG_TESTS") == nullptr)) {
    std::int64_t k = SplitPrimeTable::kStartIndex - 1;
    std::int64_t found = -1;
    sieve_split_primes(0, 3375517772ULL, SieveConfig{}, [&](std::span<const std::uint64_t> block, std::uint64_t) {
      for (const std::uint64_t q : block) {
        ++k;
        if (q == 3375517771ULL) found = k;
      }
      return true;
    });
    CHECK(found == 80802434);
  }
}
