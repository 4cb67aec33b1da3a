#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace stewart {

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization in ascending order; factor(1) is empty.
Factorization factor(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Exponent of p in n (n != 0).
int valuation(const mpz_class& n, const mpz_class& p);
int valuation(std::uint64_t n, std::uint64_t p);

/// Kronecker symbol (5|p) for p != 5: +1 when p = +-1 mod 5, -1 otherwise.
int legendre5(std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

enum class Primality { Composite, Prime, ProbablePrime };

/// Proven verdicts below 3.3e24 (Miller-Rabin on the first 13 prime bases);
/// above that a Baillie-PSW pass reports ProbablePrime.
Primality classify_prime(const mpz_class& n);

struct BigFactorization {
  std::vector<std::pair<mpz_class, int>> factors;  // ascending primes
  bool complete = true;          // false when a composite cofactor resisted splitting
  bool primality_proven = true;  // false when some factor is only a probable prime
  mpz_class unfactored = 1;      // product of the cofactors that were not split
};

/// Trial division by primes below `trial_limit`, then Pollard-Brent rho with
/// at most `rho_iterations` steps per split attempt.
BigFactorization factor_big(mpz_class n, std::uint64_t trial_limit = 10000,
                            std::uint64_t rho_iterations = 20'000'000);

}  // namespace stewart
