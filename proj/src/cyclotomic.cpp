#include "stewart/cyclotomic.hpp"

#include <algorithm>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stewart/error.hpp"
#include "stewart/fiboracle.hpp"
#include "stewart/numtheory.hpp"

namespace stewart {

QuadInt gamma_pow_minus_one(std::uint64_t n) { return pow(QuadInt::gamma(), n) - QuadInt{1, 0}; }

CyclotomicValue phi_eval_exact(std::uint64_t n, std::uint64_t cutoff) {
  if (n == 0 || n > cutoff) {
    throw Error(ErrorKind::HypothesisViolation, "phi_eval_exact needs 1 <= n <= " + std::to_string(cutoff));
  }
  QuadInt value{1, 0};
  std::vector<QuadInt> denominators;
  for (const std::uint64_t d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 1) value *= gamma_pow_minus_one(n / d);
    if (mu == -1) denominators.push_back(gamma_pow_minus_one(n / d));
  }
  for (const QuadInt& den : denominators) {
    auto q = exact_div(value, den);
    if (!q) throw Error(ErrorKind::InternalInconsistency, "inexact division evaluating Phi_" + std::to_string(n));
    value = std::move(*q);
  }
  CyclotomicValue out{n, value, value.norm(), false};
  out.is_unit = abs(out.norm) == 1;
  return out;
}

Interval log_abs_phi_at_inverse_gamma(std::uint64_t n, Precision prec) {
  // gamma^-1 = eta - 2
  const Interval z = QuadInt{-2, 1}.embed(prec);
  const Interval one = Interval::from_int(1, prec);
  Interval sum(prec);
  for (const std::uint64_t m : divisors(n)) {
    const int mu = mobius(n / m);
    if (mu == 0) continue;
    const Interval term = log(abs(one - pow(z, static_cast<long>(m))));
    sum = mu > 0 ? sum + term : sum - term;
  }
  return sum;
}

namespace {

SchwarzReport summarize(std::uint64_t n_max, std::vector<Interval> abs_values, Precision prec) {
  SchwarzReport report;
  report.n_max = n_max;
  const Interval one = Interval::from_int(1, prec);
  const Interval one_minus_z = one - QuadInt{-2, 1}.embed(prec);
  report.bound = abs(log(one_minus_z)) / one_minus_z;
  const Interval one_minus_r = one - abs(QuadInt{-2, 1}.embed(prec));
  report.modulus_bound = abs(log(one_minus_r)) / one_minus_r;
  report.within_modulus_bound = std::all_of(abs_values.begin(), abs_values.end(), [&](const Interval& v) {
    return certainly_less_equal(v, report.modulus_bound);
  });
  const Interval limit = Interval::from_decimal("0.24", prec);
  report.values.reserve(abs_values.size());
  for (const Interval& v : abs_values) report.values.push_back(v.upper());
  if (!abs_values.empty()) report.n1_value = abs_values.front();
  report.within_bound = true;
  report.max_value = Interval(prec);
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const Interval& v = abs_values[n - 1];
    if (report.argmax == 0 || mpfr_greater_p(v.hi().get(), report.max_value.hi().get())) {
      report.max_value = v;
      report.argmax = n;
    }
    if (!certainly_less_equal(v, report.bound)) report.within_bound = false;
  }
  report.below_024 = certainly_less(report.bound, limit) && certainly_less(report.max_value, limit);
  report.pass = report.within_bound && report.below_024;
  return report;
}

}  // namespace

SchwarzReport schwarz_bound_check(std::uint64_t n_max, Precision prec, int threads) {
  if (n_max == 0) throw std::invalid_argument("schwarz_bound_check needs n_max >= 1");
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif
  std::vector<Interval> values(n_max, Interval(prec));
  const auto count = static_cast<std::int64_t>(n_max);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    values[i] = abs(log_abs_phi_at_inverse_gamma(static_cast<std::uint64_t>(i + 1), prec));
  }
  return summarize(n_max, std::move(values), prec);
}

SchwarzReport schwarz_bound_check_serial(std::uint64_t n_max, Precision prec) {
  if (n_max == 0) throw std::invalid_argument("schwarz_bound_check needs n_max >= 1");
  std::vector<Interval> values;
  values.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) values.push_back(abs(log_abs_phi_at_inverse_gamma(n, prec)));
  return summarize(n_max, std::move(values), prec);
}

EsumCheck esum_identity_check(std::uint64_t n, Precision prec) {
  const CyclotomicValue phi = phi_eval_exact(n);
  EsumCheck out;
  out.n = n;
  out.lhs = log(Interval::from_mpz(abs(phi.norm), prec));
  const Interval log_gamma = log(abs(QuadInt::gamma().embed(prec)));
  const Interval totient = Interval::from_mpz(mpz_class(static_cast<unsigned long>(euler_phi(n))), prec);
  out.remainder = Interval::from_int(2, prec) * log_abs_phi_at_inverse_gamma(n, prec);
  out.rhs = totient * log_gamma + out.remainder;
  out.delta = abs(out.lhs - out.rhs);
  const Interval limit = Interval::from_decimal("0.48", prec);
  out.delta_ok = certainly_less_equal(out.delta, limit);
  out.remainder_ok = certainly_less_equal(abs(out.remainder), limit);
  return out;
}

namespace {

// Generators of the primes of Z[eta] above p.
std::vector<QuadInt> primes_above(const mpz_class& p) {
  if (p == 5) return {QuadInt{-1, 2}};  // sqrt 5 = 2 eta - 1
  if (!mpz_fits_ulong_p(p.get_mpz_t())) throw Error(ErrorKind::InternalInconsistency, "prime too large");
  const std::uint64_t q = p.get_ui();
  if (split_type(q) == 2) return {QuadInt{p, 0}};
  const QuadInt pi = prime_above(q);
  return {pi, pi.conj()};
}

}  // namespace

SchinzelReport schinzel_check(std::uint64_t n) {
  SchinzelReport report;
  report.n = n;
  if (n == 6) {
    report.excluded = true;
    report.pass = true;
    return report;
  }
  const CyclotomicValue phi = phi_eval_exact(n);
  // Non-primitive primes are exactly those dividing 5 * prod_{d | n, d < n} F_d.
  mpz_class shared = 5;
  for (const std::uint64_t d : divisors(n)) {
    if (d < n) shared *= fib_pair(d).first;
  }
  mpz_class rest = abs(phi.norm);
  mpz_class non_primitive = 1, g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), shared.get_mpz_t());
    if (g == 1) break;
    rest /= g;
    non_primitive *= g;
  }
  const BigFactorization fac = factor_big(non_primitive);
  if (!fac.complete) throw Error(ErrorKind::IncompleteFactorization, "non-primitive part of N(Phi_n(gamma))");
  report.pass = true;
  for (const auto& [p, e] : fac.factors) {
    const int nu_n = valuation(mpz_class(static_cast<unsigned long>(n)), p);
    for (const QuadInt& prime : primes_above(p)) {
      const int v = valuation(phi.value, prime);
      SchinzelEntry entry{.p = p, .prime = prime, .valuation = v, .nu_p_n = nu_n, .ramified = p == 5, .pass = v <= nu_n};
      report.pass = report.pass && entry.pass;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace stewart
