#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "stewart/interval.hpp"
#include "stewart/quadfield.hpp"

namespace stewart {

/// Phi_n(gamma) in Z[eta], gamma = -eta^2.
struct CyclotomicValue {
  std::uint64_t n = 0;
  QuadInt value;
  mpz_class norm;
  /// |norm| = 1 (happens at n = 2, where Phi_2(gamma) = -eta).
  bool is_unit = false;

  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;
};

inline constexpr std::uint64_t kExactCyclotomicCutoff = 200;

/// Exact Mobius product over the divisors of n; every division is checked.
CyclotomicValue phi_eval_exact(std::uint64_t n, std::uint64_t cutoff = kExactCyclotomicCutoff);

/// gamma^n - 1 in Z[eta].
QuadInt gamma_pow_minus_one(std::uint64_t n);

/// log |Phi_n(gamma^-1)| = sum_{m | n} mu(n/m) log |1 - gamma^-m|.
Interval log_abs_phi_at_inverse_gamma(std::uint64_t n, Precision prec = kDefaultPrecision);

struct SchwarzReport {
  std::uint64_t n_max = 0;
  /// |log(1 - gamma^-1)| / (1 - gamma^-1), about 0.2340.
  Interval bound;
  /// |log |Phi_1(gamma^-1)||, about 0.3234; outside the swept range.
  Interval n1_value;
  /// Maximum of |log |Phi_n(gamma^-1)|| over 2 <= n <= n_max.
  Interval max_value;
  std::uint64_t argmax = 0;
  /// Upper endpoints of |log |Phi_n(gamma^-1)||, index n - 1.
  std::vector<double> values;
  /// |log(1 - r)| / (1 - r) with r = |gamma^-1|, about 0.7786.
  Interval modulus_bound;
  bool within_bound = false;          // every n >= 2 certainly <= bound
  bool within_modulus_bound = false;  // every n >= 1 certainly <= modulus_bound
  bool below_024 = false;      // max_value and bound certainly < 0.24
  bool pass = false;

  friend bool operator==(const SchwarzReport&, const SchwarzReport&) = default;
};

/// Sweep over 1 <= n <= n_max, split across OpenMP threads.
SchwarzReport schwarz_bound_check(std::uint64_t n_max, Precision prec = kDefaultPrecision, int threads = 0);
/// Single-threaded reference for the same sweep.
SchwarzReport schwarz_bound_check_serial(std::uint64_t n_max, Precision prec = kDefaultPrecision);

struct EsumCheck {
  std::uint64_t n = 0;
  Interval lhs;    // log |N(Phi_n(gamma))|
  Interval rhs;    // phi(n) log|gamma| + 2 log |Phi_n(gamma^-1)|
  Interval delta;  // |lhs - rhs|
  /// 2 log |Phi_n(gamma^-1)|, the O_1(0.48) remainder.
  Interval remainder;
  bool delta_ok = false;      // delta certainly <= 0.48
  bool remainder_ok = false;  // |remainder| certainly <= 0.48

  friend bool operator==(const EsumCheck&, const EsumCheck&) = default;
};

EsumCheck esum_identity_check(std::uint64_t n, Precision prec = kDefaultPrecision);

struct SchinzelEntry {
  mpz_class p;
  QuadInt prime;     // generator of the prime of Z[eta] above p
  int valuation = 0; // nu of Phi_n(gamma) at that prime
  int nu_p_n = 0;    // nu_p(n)
  bool ramified = false;  // the prime above 5
  bool pass = false;

  friend bool operator==(const SchinzelEntry&, const SchinzelEntry&) = default;
};

struct SchinzelReport {
  std::uint64_t n = 0;
  bool excluded = false;  // n = 6
  std::vector<SchinzelEntry> entries;  // non-primitive primes only
  bool pass = false;

  friend bool operator==(const SchinzelReport&, const SchinzelReport&) = default;
};

SchinzelReport schinzel_check(std::uint64_t n);

}  // namespace stewart
