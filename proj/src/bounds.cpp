#include "stewart/bounds.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stewart/error.hpp"
#include "stewart/numtheory.hpp"

namespace stewart {

namespace {

Interval I(long v, Precision p) { return Interval::from_int(v, p); }
Interval D(const char* text, Precision p) { return Interval::from_decimal(text, p); }
Interval Z(const mpz_class& v, Precision p) { return Interval::from_mpz(v, p); }

Interval log_eta(Precision p) { return log(Interval::golden_ratio(p)); }

// Sum of log(x_i) for consecutive chunks of fixed size, each chunk summed in
// order, chunk sums added in order: the result does not depend on threads.
template <typename TermFn>
Interval chunked_sum(std::int64_t count, Precision prec, TermFn term) {
  constexpr std::int64_t kChunk = 4096;
  const std::int64_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<Interval> partial(static_cast<std::size_t>(chunks), Interval(prec));
#pragma omp parallel for schedule(dynamic, 1) if (chunks > 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    Interval s(prec);
    const std::int64_t end = std::min(count, (c + 1) * kChunk);
    for (std::int64_t i = c * kChunk; i < end; ++i) s += term(i);
    partial[static_cast<std::size_t>(c)] = std::move(s);
  }
  Interval total(prec);
  for (const Interval& s : partial) total += s;
  return total;
}

// log(1 + 2^-k) + log 50233.5
Interval lambda_prefactor_log(std::int64_t k, Precision p) {
  const Interval one = I(1, p);
  return log(one + pow(D("0.5", p), static_cast<long>(k))) + log(D("50233.5", p));
}

Interval log_kappa_product(const mpz_class& kappa, Precision p) {
  return log(Z(kappa, p)) + log(Z(kappa + 1, p));
}

void require_table(int k, const SplitPrimeTable& table) {
  if (k < SplitPrimeTable::kStartIndex) throw Error(ErrorKind::HypothesisViolation, "Theta_k needs k >= 2");
  if (table.max_index() < k) {
    throw Error(ErrorKind::InsufficientPrimes,
                "Theta_" + std::to_string(k) + " needs q_2..q_" + std::to_string(k) + ", table ends at q_" +
                    std::to_string(table.max_index()));
  }
}

}  // namespace

Interval theta_cap(int k, const SplitPrimeTable& table, Precision prec) {
  require_table(k, table);
  const Interval eta = Interval::golden_ratio(prec);
  mpz_class product = 1;
  Interval logs_product = I(1, prec);
  for (int j = 2; j <= k; ++j) {
    const mpz_class q = static_cast<unsigned long>(table.at(j));
    product *= q;
    logs_product *= log(eta * Z(q, prec));
  }
  return (I(k + 1, prec) * log(eta) + log(Z(product, prec))) * logs_product;
}

Interval log_theta_cap(int k, const SplitPrimeTable& table, Precision prec) {
  require_table(k, table);
  const Interval eta = Interval::golden_ratio(prec);
  const auto primes = table.primes();
  const std::int64_t count = k - 1;
  auto q_at = [&](std::int64_t i) { return mpz_class(static_cast<unsigned long>(primes[static_cast<std::size_t>(i)])); };
  // Blocks of 64 terms: an exact product of q's and an interval product of log(eta q)'s, one log each.
  constexpr std::int64_t kBlock = 64;
  const std::int64_t blocks = (count + kBlock - 1) / kBlock;
  auto block_range = [&](std::int64_t b) { return std::pair{b * kBlock, std::min(count, (b + 1) * kBlock)}; };
  const Interval sum_log_q = chunked_sum(blocks, prec, [&](std::int64_t b) {
    mpz_class product = 1;
    for (auto [i, end] = block_range(b); i < end; ++i) product *= q_at(i);
    return log(Z(product, prec));
  });
  const Interval log_eta_value = log(eta);
  const Interval sum_loglog = chunked_sum(blocks, prec, [&](std::int64_t b) {
    // log q = log q0 + 2 atanh(t), t = (q - q0)/(q + q0) <= 2^-12, and
    // atanh t - (t + t^3/3 + t^5/5 + t^7/7) lies in [0, t^9/8].
    // The anchor q0 moves (one MPFR log) whenever t would exceed 2^-12.
    auto [begin, end] = block_range(b);
    Real base_lo(prec), base_hi(prec), lo(prec), hi(prec), t(prec), u(prec), power(prec), term(prec);
    unsigned long q0 = 0;
    mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
    mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
    auto series = [&](unsigned long d, unsigned long s, mpfr_rnd_t rnd, bool with_remainder) {
      mpfr_set_ui(t.get(), d, MPFR_RNDN);
      mpfr_div_ui(t.get(), t.get(), s, rnd);
      mpfr_set(u.get(), t.get(), rnd);
      for (unsigned long odd = 3; odd <= 7; odd += 2) {
        mpfr_pow_ui(power.get(), t.get(), odd, rnd);
        mpfr_div_ui(power.get(), power.get(), odd, rnd);
        mpfr_add(u.get(), u.get(), power.get(), rnd);
      }
      if (with_remainder) {
        mpfr_pow_ui(power.get(), t.get(), 9, rnd);
        mpfr_div_ui(power.get(), power.get(), 8, rnd);
        mpfr_add(u.get(), u.get(), power.get(), rnd);
      }
      mpfr_mul_2ui(u.get(), u.get(), 1, rnd);
    };
    for (std::int64_t i = begin; i < end; ++i) {
      const unsigned long q = static_cast<unsigned long>(primes[static_cast<std::size_t>(i)]);
      if (q0 == 0 || ((q - q0) << 12) > q + q0) {
        q0 = q;
        mpfr_set_ui(base_lo.get(), q0, MPFR_RNDN);
        mpfr_log(base_lo.get(), base_lo.get(), MPFR_RNDD);
        mpfr_add(base_lo.get(), base_lo.get(), log_eta_value.lo().get(), MPFR_RNDD);
        mpfr_set_ui(base_hi.get(), q0, MPFR_RNDN);
        mpfr_log(base_hi.get(), base_hi.get(), MPFR_RNDU);
        mpfr_add(base_hi.get(), base_hi.get(), log_eta_value.hi().get(), MPFR_RNDU);
      }
      series(q - q0, q + q0, MPFR_RNDD, false);
      mpfr_add(term.get(), base_lo.get(), u.get(), MPFR_RNDD);
      mpfr_mul(lo.get(), lo.get(), term.get(), MPFR_RNDD);
      series(q - q0, q + q0, MPFR_RNDU, true);
      mpfr_add(term.get(), base_hi.get(), u.get(), MPFR_RNDU);
      mpfr_mul(hi.get(), hi.get(), term.get(), MPFR_RNDU);
    }
    return log(Interval::from_endpoints(lo, hi));
  });
  return log(I(k + 1, prec) * log(eta) + sum_log_q) + sum_loglog;
}

Interval lambda_bound(const BoundParams& params, const Interval& theta_k) {
  const int k = params.k;
  const Precision p = params.precision;
  if (k < kMinK) throw Error(ErrorKind::HypothesisViolation, "Lambda(k, kappa) needs k >= 8");
  if (params.kappa < 1) throw Error(ErrorKind::HypothesisViolation, "kappa must be positive");
  const Interval inner = lambda_prefactor_log(k, p) + I(3, p) * log(I(k + 1, p)) - log_factorial(k - 1, p) +
                         log_kappa_product(params.kappa, p) + log(theta_k);
  return I(7, p) * I(k, p) * I(k + 1, p) * exp(inner / I(k - 1, p));
}

Interval lambda_bound_expanded(const BoundParams& params, const Interval& theta_k) {
  const int k = params.k;
  const Precision p = params.precision;
  if (k < kMinK) throw Error(ErrorKind::HypothesisViolation, "Lambda(k, kappa) needs k >= 8");
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k - 1));
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(k + 2));
  const Interval base = (I(1, p) + pow(D("0.5", p), static_cast<long>(k))) * D("50233.5", p) * Z(power, p) *
                        Z(params.kappa * (params.kappa + 1), p) * theta_k / Z(factorial, p);
  return I(7, p) * I(k, p) * pow(base, I(1, p) / I(k - 1, p));
}

Interval lna_bound(const Interval& epsilon, const Interval& a) {
  const Precision p{std::max(epsilon.precision(), a.precision())};
  if (!epsilon.is_positive() || certainly_less(I(1, p), epsilon)) {
    throw Error(ErrorKind::HypothesisViolation, "epsilon must lie in (0, 1]");
  }
  if (!a.is_positive()) throw Error(ErrorKind::HypothesisViolation, "A must be positive");
  const Interval threshold = exp(I(2, p) * epsilon) * pow(epsilon, -epsilon);
  if (certainly_less(a, threshold)) {
    throw Error(ErrorKind::HypothesisViolation, "A < e^(2 eps) eps^(-eps)");
  }
  return a * pow(I(2, p) * log(a), epsilon);
}

KRange default_k_range() {
  static const int to = static_cast<int>(enumerate_split_primes_upto(999).size());
  return {kMinK, to};
}

namespace {

struct Evaluation {
  int k = 0;
  Interval theta;
  Interval lambda;
  Interval dsn;
};

Evaluation evaluate(const mpz_class& kappa, int k, const SplitPrimeTable& table, Precision prec) {
  Evaluation e{k, theta_cap(k, table, prec), Interval(prec), Interval(prec)};
  e.lambda = lambda_bound(BoundParams{kappa, k, prec}, e.theta);
  e.dsn = lna_bound(I(1, prec) / I(k - 1, prec), e.lambda);
  return e;
}

Interval precondition_floor(int k, Precision prec) {
  const Interval kk = I(k, prec);
  const Interval big = log(exp(I(3, prec) * kk) * pow(kk, 3) + I(1, prec));
  return max(big, I(100, prec));
}

BoundResult to_result(const mpz_class& kappa, const Evaluation& e, Precision prec) {
  BoundResult r;
  r.kappa = kappa;
  r.k = e.k;
  r.theta_k = e.theta.upper();
  r.lambda = e.lambda.upper();
  r.log_n_bound = e.dsn.upper();
  r.log_n_bound_decimal = e.dsn.upper_string(25);
  r.precision_bits = static_cast<int>(prec.bits);
  r.validity.k_ge_8 = e.k >= kMinK;
  const Interval floor_value = precondition_floor(e.k, prec);
  r.validity.precondition_floor = floor_value.upper();
  r.validity.beyond_table_range = kappa > 1000000;
  // log n <= bound is excluded once n0 > bound; the precondition needs n0 >= floor.
  const mpz_class from_bound = floor_lower(Interval::from_endpoints(e.dsn.hi(), e.dsn.hi())) + 1;
  const mpz_class from_floor = ceil_upper(floor_value);
  r.n0 = std::max(from_bound, from_floor).get_si();
  return r;
}

}  // namespace

BoundResult evaluate_at_k(const mpz_class& kappa, int k, const SplitPrimeTable& table, Precision prec) {
  if (k < kMinK) throw Error(ErrorKind::HypothesisViolation, "k must be >= 8");
  if (kappa < 1) throw Error(ErrorKind::HypothesisViolation, "kappa must be positive");
  const Evaluation e = evaluate(kappa, k, table, prec);
  BoundResult r = to_result(kappa, e, prec);
  r.scan.push_back({e.k, e.theta.upper(), e.lambda.upper(), e.dsn.upper()});
  return r;
}

BoundResult n0_optimize(const mpz_class& kappa, const OptimizeOptions& options) {
  const KRange range = options.k_range.value_or(default_k_range());
  const SplitPrimeTable table = enumerate_split_primes_count(static_cast<std::size_t>(std::max(range.to - 1, 1)));
  return n0_optimize(kappa, options, table);
}

BoundResult n0_optimize(const mpz_class& kappa, const OptimizeOptions& options, const SplitPrimeTable& table) {
  const KRange range = options.k_range.value_or(default_k_range());
  if (range.from < kMinK || range.to < range.from) {
    throw Error(ErrorKind::HypothesisViolation, "k range must satisfy 8 <= from <= to");
  }
  if (kappa < 1) throw Error(ErrorKind::HypothesisViolation, "kappa must be positive");
  const Precision prec = options.precision;
  require_table(range.to, table);
  const int count = range.to - range.from + 1;
  std::vector<Evaluation> rows(static_cast<std::size_t>(count));
  int threads = options.threads;
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (int i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = evaluate(kappa, range.from + i, table, prec);

  // Deterministic merge: smallest upper endpoint, ties to the smaller k.
  const Evaluation* best = &rows.front();
  for (const Evaluation& e : rows) {
    if (mpfr_less_p(e.dsn.hi().get(), best->dsn.hi().get())) best = &e;
  }
  BoundResult r = to_result(kappa, *best, prec);
  r.scan.reserve(rows.size());
  for (const Evaluation& e : rows) r.scan.push_back({e.k, e.theta.upper(), e.lambda.upper(), e.dsn.upper()});
  return r;
}

Interval big_kappa_c(std::int64_t k, Precision p) {
  if (k < 2) throw Error(ErrorKind::HypothesisViolation, "C(k) needs k >= 2");
  const Interval kk = Z(mpz_class(static_cast<long>(k)), p);
  const Interval k1 = Z(mpz_class(static_cast<long>(k + 1)), p);
  const Interval km1 = Z(mpz_class(static_cast<long>(k - 1)), p);
  const Interval theta_factor = I(2, p) * log_eta(p) + D("1.3", p) * km1 * log(kk);
  const Interval inner = lambda_prefactor_log(k, p) + Z(mpz_class(static_cast<long>(k + 2)), p) * log(k1) -
                         log_factorial(static_cast<std::uint64_t>(k - 1), p) + log(theta_factor);
  return exp(inner / km1);
}

namespace {

ChainLink link(std::string name, std::string statement, const Interval& lhs, const Interval& rhs, bool strict = true) {
  return {std::move(name), std::move(statement), lhs.upper(), rhs.lower(),
          strict ? certainly_less(lhs, rhs) : certainly_less_equal(lhs, rhs)};
}

BigKappaReport chain(const Interval& log_kappa, const Interval& log_m, const BigKappaOptions& options) {
  const Precision p = options.precision;
  if (certainly_less(log_kappa, I(250000, p))) {
    throw Error(ErrorKind::HypothesisViolation, "the large-kappa chain needs log kappa >= 250000");
  }
  BigKappaReport report;
  report.log_kappa = log_kappa.lower();
  const mpz_class k_lo = floor_lower(log_m);
  const mpz_class k_hi = floor_lower(Interval::from_endpoints(log_m.hi(), log_m.hi()));
  if (k_lo != k_hi) throw Error(ErrorKind::InternalInconsistency, "floor(log M) undecided; raise the precision");
  const std::int64_t k = k_lo.get_si();
  report.k = k;

  const Interval kk = Z(mpz_class(static_cast<long>(k)), p);
  const Interval km1 = kk - I(1, p);
  const Interval log_k = log(kk);
  const Interval loglog_k = log(log_k);
  const Interval log_m_floor = I(500000, p);
  auto& links = report.links;

  links.push_back(link("k_floor", "k = floor(log M) >= 500000", log_m_floor, kk, false));

  // Theta_k against the estimate implied by eta q_k < k^1.3.
  const Interval log_theta_estimate =
      log(I(2, p) * log_eta(p) + D("1.3", p) * km1 * log_k) + km1 * log(D("1.3", p) * log_k);
  if (k <= options.numeric_theta_limit) {
    const SplitPrimeTable table = enumerate_split_primes_count(static_cast<std::size_t>(k - 1), options.sieve);
    links.push_back(link("theta_estimate", "log Theta_k < log((2 log eta + 1.3(k-1) log k)(1.3 log k)^(k-1))",
                         log_theta_cap(static_cast<int>(k), table, p), log_theta_estimate));
  } else {
    ChainLink symbolic{"theta_estimate", "Theta_k < (2 log eta + 1.3(k-1) log k)(1.3 log k)^(k-1) [from eta q_k < k^1.3]",
                       log_theta_estimate.upper(), log_theta_estimate.lower(), true};
    links.push_back(symbolic);
  }

  const Interval c500k = big_kappa_c(500000, p);
  links.push_back(link("c_500000", "C(500000) < 2.72", c500k, D("2.72", p)));
  const Interval ck = k == 500000 ? c500k : big_kappa_c(k, p);
  links.push_back(link("c_k", "C(k) < 2.72", ck, D("2.72", p)));

  // Lambda from the Theta_k estimate, in log space.
  const Interval log_lambda =
      log(I(7, p) * kk * (kk + I(1, p))) +
      (lambda_prefactor_log(k, p) + I(3, p) * log(kk + I(1, p)) - log_factorial(static_cast<std::uint64_t>(k - 1), p) +
       log_m + log_theta_estimate) /
          km1;
  const Interval log_m_root = log_m / km1;
  links.push_back(link("lambda_upper", "log Lambda < log(24.8 k log k M^(1/(k-1)))", log_lambda,
                       log(D("24.8", p)) + log_k + loglog_k + log_m_root));

  const Interval middle = log(D("24.8", p)) + log_k + loglog_k + log_m_root;
  links.push_back(link("log_lambda", "log 24.8 + log k + log log k + log M/(k-1) < 1.52 log k", middle,
                       D("1.52", p) * log_k));
  links.push_back(link("lambda_log_consistency", "log Lambda < 1.52 log k", log_lambda, D("1.52", p) * log_k));

  const Interval boundary = I(500000 - 2, p);
  links.push_back(link("m_root", "log M/(k-1) <= 1 + 2/(500000-2)", log_m_root, I(1, p) + I(2, p) / boundary, false));
  const Interval log_root = log(D("3.04", p) * log_k) / km1;
  links.push_back(link("log_root", "log(3.04 log k)/(k-1) <= log(3.04 log 500000)/(500000-2)", log_root,
                       log(D("3.04", p) * log(log_m_floor)) / boundary, false));

  const Interval log_final_rhs = log(D("67.42", p)) + log(log_m) + log(log(log_m));
  links.push_back(link("final", "24.8 k log k M^(1/(k-1)) (3.04 log k)^(1/(k-1)) < 67.42 log M log log M",
                       log(D("24.8", p)) + log_k + loglog_k + log_m_root + log_root, log_final_rhs));
  const Interval lambda_upper = exp(log_lambda);
  const Interval log_dsn = log_lambda + log(I(2, p) * log_lambda) / km1;
  links.push_back(link("final_direct", "Lambda (2 log Lambda)^(1/(k-1)) < 67.42 log M log log M", log_dsn,
                       log_final_rhs));
  (void)lambda_upper;

  const Interval loglog_kappa = log(log_kappa);
  links.push_back(link("log_m", "log M <= 2.0001 log kappa", log_m, D("2.0001", p) * log_kappa, false));
  links.push_back(link("loglog_m", "log log M <= 1.056 log log kappa", log(log_m), D("1.056", p) * loglog_kappa, false));
  links.push_back(link("constant_143", "67.42 * 2.0001 * 1.056 < 143", D("67.42", p) * D("2.0001", p) * D("1.056", p),
                       I(143, p)));

  report.threshold = (I(143, p) * log_kappa * loglog_kappa).upper();
  report.pass = std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.pass; });
  return report;
}

}  // namespace

BigKappaReport bigkappa_bound(const Interval& log_kappa, const BigKappaOptions& options) {
  const Precision p = options.precision;
  if (!log_kappa.is_positive()) throw Error(ErrorKind::HypothesisViolation, "log kappa must be positive");
  // log M = 2 log kappa + log(1 + 1/kappa), and 0 < log(1 + 1/kappa) < 1/kappa.
  const Interval two_log = I(2, p) * log_kappa;
  const Interval slack = exp(-log_kappa);
  const Interval log_m = hull(two_log, two_log + slack);
  return chain(log_kappa, log_m, options);
}

BigKappaReport bigkappa_bound(const mpz_class& kappa, const BigKappaOptions& options) {
  const Precision p = options.precision;
  if (kappa < 1) throw Error(ErrorKind::HypothesisViolation, "kappa must be positive");
  return chain(log(Z(kappa, p)), log_kappa_product(kappa, p), options);
}

mpz_class yu_prime_floor(int k) {
  if (k < 1) throw Error(ErrorKind::HypothesisViolation, "k must be positive");
  // Enough bits to resolve the integer part of e^{3k} k^3.
  auto bits = static_cast<mpfr_prec_t>(3.0 * k * 1.4426950408889634 + 3.0 * std::log2(static_cast<double>(k)) + 96);
  for (;; bits *= 2) {
    const Precision p{bits};
    const Interval kk = I(k, p);
    const Interval x = exp(I(3, p) * kk) * pow(kk, 3);
    const mpz_class lo = floor_lower(x);
    const mpz_class hi = floor_lower(Interval::from_endpoints(x.hi(), x.hi()));
    if (lo == hi) return lo + 1;  // e^{3k} k^3 is irrational, so ceil = floor + 1
  }
}

YuCheckReport yu_constants_check(int k, Precision prec) {
  if (k < kMinK) throw Error(ErrorKind::HypothesisViolation, "Yu constants need k >= 8");
  const Precision p = prec;
  YuCheckReport report;
  report.k = k;
  report.p_floor = yu_prime_floor(k);
  const Interval pp = Z(report.p_floor, p);
  const Interval kk = I(k, p);
  const Interval one = I(1, p);
  const Interval e24 = exp(I(24, p));
  const Interval x512 = I(512, p) * e24;
  auto& out = report.results;
  auto add = [&](std::string name, int f, const Interval& lhs, const Interval& rhs, bool strict = true) {
    out.push_back({std::move(name), f, lhs.upper(), rhs.lower(),
                   strict ? certainly_less(lhs, rhs) : certainly_less_equal(lhs, rhs)});
  };

  // ((p-1)/(p-2))^k < e^{1/(64 e^24 - 1/4)}, compared in log form.
  add("unit_ratio_power", 0, kk * log((pp - one) / (pp - I(2, p))), one / (I(64, p) * e24 - D("0.25", p)));
  add("k_squared", 0, I(6, p) * (kk + log(kk)), kk * kk);
  add("e2_over_6_chain", 0, one, pow(exp(I(2, p)) / I(6, p), static_cast<long>(k)) * kk * kk /
                                     (I(6, p) * (kk + log(kk))));
  add("b_prime_ratio", 0, I(4, p) / (I(2, p) * log_eta(p) * pow(log(I(6, p)), 3)), one);
  add("closing_constant", 0,
      I(3588, p) * exp(one / (I(64, p) * e24 - D("0.5", p))) * x512 / (x512 - one), D("3588.1", p));

  const Interval kprime = (I(2, p) + log(I(7, p))) * kk + D("4.71", p) + log(I(2, p));
  for (const int f : {1, 2}) {
    const Interval flogp = I(f, p) * log(pp);
    // p^f / delta <= p/(p-1) * p, with delta >= 1 (f = 1) or delta >= p - 1 (f = 2); divided through by p.
    const Interval pf_over_delta = f == 1 ? one : pp / (pp - one);
    add("p_over_delta", f, pf_over_delta, x512 / (x512 - one), false);
    add("p_over_log_power", f, kk - kk * log(kk), log(pp) - (kk + one) * log(flogp));
    add("log_p_vs_kprime", f, kprime + log(kprime), flogp);
    add("second_max", f, log(I(2, p) * exp(I(4, p)) * (kk + one)), flogp, false);
  }
  report.pass = std::all_of(out.begin(), out.end(), [](const YuInequality& y) { return y.pass; });
  return report;
}

Interval prop_order_bound(const mpz_class& p, std::uint64_t n, int k, const Interval& theta_k, Precision prec) {
  (void)n;  // the bound is uniform in n; primitivity of p is the caller's claim
  if (k < kMinK) throw Error(ErrorKind::HypothesisViolation, "Proposition needs k >= 8");
  if (p < yu_prime_floor(k)) throw Error(ErrorKind::HypothesisViolation, "p < e^{3k} k^3");
  if (mpz_divisible_ui_p(p.get_mpz_t(), 5)) throw Error(ErrorKind::RamifiedPrime, "p = 5");
  if (classify_prime(p) == Primality::Composite) throw Error(ErrorKind::NotPrime, "p is composite");
  const unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 5);
  const int f = (r == 1 || r == 4) ? 1 : 2;
  const Precision w = prec;
  const Interval kk = I(k, w);
  const Interval logp = log(Z(p, w));
  const Interval log_value = log(D("3588.1", w)) + kk * log(I(7, w) * kk) + I(k + 2, w) * log(kk + I(1, w)) -
                             log_factorial(static_cast<std::uint64_t>(k), w) + logp - kk * log(I(f, w) * logp) +
                             log(theta_k);
  return exp(log_value);
}

}  // namespace stewart
