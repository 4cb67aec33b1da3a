#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "stewart/interval.hpp"

namespace stewart {

/// (F_n, F_{n+1}) by fast doubling.
std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n);
/// (F_n mod m, F_{n+1} mod m), m >= 2.
std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n, const mpz_class& modulus);
std::pair<std::uint64_t, std::uint64_t> fib_pair_u64(std::uint64_t n, std::uint64_t modulus);

struct ApparitionRecord {
  std::uint64_t p = 0;
  int f_p = 0;            // residual degree in Q(sqrt 5)
  std::uint64_t alpha = 0;  // least n >= 1 with p | F_n
  int e0 = 0;             // nu_p(F_alpha)

  friend bool operator==(const ApparitionRecord&, const ApparitionRecord&) = default;
};

ApparitionRecord rank_of_apparition(std::uint64_t p);

/// nu_p(F_n) for prime p != 5 and n >= 1.
int nu_p_fib(std::uint64_t p, std::uint64_t n);

struct PrimitiveDivisor {
  mpz_class p;
  int exponent = 0;  // nu_p(F_n)
  friend bool operator==(const PrimitiveDivisor&, const PrimitiveDivisor&) = default;
};

struct PrimitiveDivisorSet {
  std::uint64_t n = 0;
  std::vector<PrimitiveDivisor> divisors;  // ascending p
  /// Every primitive prime of F_n is listed.
  bool complete = false;
  /// Every listed prime has a primality proof (Baillie-PSW otherwise).
  bool primality_proven = true;
  /// log of the primitive part of F_n; valid even when incomplete.
  Interval log_primitive_part;

  friend bool operator==(const PrimitiveDivisorSet&, const PrimitiveDivisorSet&) = default;
};

struct PrimitiveDivisorOptions {
  /// Candidates p = +-1 (mod n) up to this bound are tested by rank of apparition.
  std::uint64_t prime_budget = 100000;
  /// F_n is factored exactly when n is at most this.
  std::uint64_t exact_cutoff = 200;
  std::uint64_t rho_iterations = 20'000'000;
  Precision precision = kDefaultPrecision;
};

/// Throws Error(IncompleteFactorization) when neither the exact route nor the
/// candidate search certifies that the set is complete.
PrimitiveDivisorSet primitive_divisors(std::uint64_t n, const PrimitiveDivisorOptions& options = {});

/// Primitive part of F_n: F_n with every non-primitive prime removed.
mpz_class primitive_part(std::uint64_t n);

struct EliouCheck {
  std::uint64_t n = 0;
  Interval lhs;  // sum over primitive p of nu_p(F_n) log p
  Interval rhs;  // (phi(n) * 2 log eta - 2 log n - 0.48) / 2
  bool pass = false;
  /// False for n < 7 and n = 12, where the inequality is informational.
  bool in_regime = false;

  friend bool operator==(const EliouCheck&, const EliouCheck&) = default;
};

EliouCheck eliou_check(std::uint64_t n, const PrimitiveDivisorSet& oracle_set, Precision prec = kDefaultPrecision);

}  // namespace stewart
