#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stewart/interval.hpp"
#include "stewart/splitprimes.hpp"

namespace stewart {

/// Smallest k accepted by the Yu-type estimate.
inline constexpr int kMinK = 8;

struct BoundParams {
  mpz_class kappa = 1;
  int k = kMinK;
  Precision precision = kDefaultPrecision;
};

/// Theta_k = ((k+1) log eta + log(q_2...q_k)) * prod_{j=2}^k log(eta q_j).
Interval theta_cap(int k, const SplitPrimeTable& table, Precision prec = kDefaultPrecision);
/// log Theta_k, usable for k far beyond where Theta_k itself is representable in doubles.
Interval log_theta_cap(int k, const SplitPrimeTable& table, Precision prec = kDefaultPrecision);

/// Lambda(k, kappa) = 7k(k+1) ((1 + 2^-k) 50233.5 (k+1)^3 / (k-1)! kappa(kappa+1) Theta_k)^(1/(k-1)).
Interval lambda_bound(const BoundParams& params, const Interval& theta_k);
/// The same quantity written as 7k ((1 + 2^-k) 50233.5 (k+1)^(k+2) kappa(kappa+1) Theta_k / (k-1)!)^(1/(k-1)).
Interval lambda_bound_expanded(const BoundParams& params, const Interval& theta_k);

/// A (2 log A)^epsilon; throws HypothesisViolation unless 0 < epsilon <= 1 and
/// A >= e^(2 epsilon) epsilon^-epsilon is possible within the enclosures.
Interval lna_bound(const Interval& epsilon, const Interval& a);

/// One row of the k-scan.
struct KScanRow {
  int k = 0;
  double theta_k = 0;  // upper endpoints
  double lambda = 0;
  double dsn = 0;

  friend bool operator==(const KScanRow&, const KScanRow&) = default;
};

struct BoundValidity {
  bool k_ge_8 = false;
  /// max(log(e^{3k} k^3 + 1), 100), upper endpoint.
  double precondition_floor = 0;
  /// kappa > 10^6: accepted, but outside the published tables.
  bool beyond_table_range = false;

  friend bool operator==(const BoundValidity&, const BoundValidity&) = default;
};

struct BoundResult {
  mpz_class kappa;
  int k = 0;
  double theta_k = 0;      // upper-rounded
  double lambda = 0;       // upper-rounded
  double log_n_bound = 0;  // upper-rounded
  /// Decimal rendering of the log-n bound's upper endpoint (25 digits).
  std::string log_n_bound_decimal;
  std::int64_t n0 = 0;
  BoundValidity validity;
  int precision_bits = 128;
  std::vector<KScanRow> scan;

  friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

struct KRange {
  int from = kMinK;
  int to = 78;  // split primes below 1000
};

/// Default scan: 8 <= k <= (number of split primes below 1000).
KRange default_k_range();

struct OptimizeOptions {
  std::optional<KRange> k_range;
  Precision precision = kDefaultPrecision;
  /// 0: OpenMP default; 1: serial reference path.
  int threads = 0;
};

/// Full evaluation at a fixed k (no minimization).
BoundResult evaluate_at_k(const mpz_class& kappa, int k, const SplitPrimeTable& table,
                          Precision prec = kDefaultPrecision);

BoundResult n0_optimize(const mpz_class& kappa, const OptimizeOptions& options = {});
BoundResult n0_optimize(const mpz_class& kappa, const OptimizeOptions& options, const SplitPrimeTable& table);

struct ChainLink {
  std::string name;
  std::string statement;
  double lhs = 0;  // upper endpoint of the left side
  double rhs = 0;  // lower endpoint of the right side
  bool pass = false;

  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

struct BigKappaReport {
  double log_kappa = 0;
  std::int64_t k = 0;  // floor(log M)
  double threshold = 0;  // 143 log kappa log log kappa, upper-rounded
  std::vector<ChainLink> links;
  bool pass = false;

  friend bool operator==(const BigKappaReport&, const BigKappaReport&) = default;
};

struct BigKappaOptions {
  Precision precision = kDefaultPrecision;
  /// Evaluate Theta_k from actual split primes when k is at most this.
  std::int64_t numeric_theta_limit = 600000;
  SieveConfig sieve;
};

/// C(k) = ((1 + 2^-k) 50233.5 (k+1)^(k+2) / (k-1)! (2 log eta + 1.3 (k-1) log k))^(1/(k-1)).
Interval big_kappa_c(std::int64_t k, Precision prec = kDefaultPrecision);

BigKappaReport bigkappa_bound(const Interval& log_kappa, const BigKappaOptions& options = {});
BigKappaReport bigkappa_bound(const mpz_class& kappa, const BigKappaOptions& options = {});

struct YuInequality {
  std::string name;
  int f_p = 0;  // 0 when independent of the residual degree
  double lhs = 0;  // rounded up
  double rhs = 0;  // rounded down
  bool pass = false;

  friend bool operator==(const YuInequality&, const YuInequality&) = default;
};

struct YuCheckReport {
  int k = 0;
  mpz_class p_floor;  // ceil(e^{3k} k^3)
  std::vector<YuInequality> results;
  bool pass = false;

  friend bool operator==(const YuCheckReport&, const YuCheckReport&) = default;
};

/// ceil(e^{3k} k^3), computed exactly.
mpz_class yu_prime_floor(int k);

YuCheckReport yu_constants_check(int k, Precision prec = kDefaultPrecision);

/// 3588.1 (7k)^k (k+1)^(k+2) / k! * p / (f_p log p)^k * Theta_k.
Interval prop_order_bound(const mpz_class& p, std::uint64_t n, int k, const Interval& theta_k,
                          Precision prec = kDefaultPrecision);

}  // namespace stewart
