#include "stewart/fiboracle.hpp"

#include <algorithm>
#include <bit>

#include "stewart/error.hpp"
#include "stewart/numtheory.hpp"
#include "stewart/quadfield.hpp"

namespace stewart {

std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n) {
  mpz_class a = 0, b = 1, c, d;
  for (int bit = 63 - std::countl_zero(n | 1); bit >= 0; --bit) {
    c = a * (2 * b - a);
    d = a * a + b * b;
    if ((n >> bit) & 1) {
      a = d;
      b = c + d;
    } else {
      a = c;
      b = d;
    }
  }
  if (n == 0) return {0, 1};
  return {a, b};
}

std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n, const mpz_class& modulus) {
  if (modulus < 2) throw std::invalid_argument("fib_pair modulus must be >= 2");
  mpz_class a = 0, b = 1, c, d, t;
  for (int bit = 63 - std::countl_zero(n | 1); bit >= 0; --bit) {
    t = 2 * b - a;
    c = a * t;
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    d = a * a + b * b;
    mpz_mod(d.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
    if ((n >> bit) & 1) {
      a = d;
      b = c + d;
      if (b >= modulus) b -= modulus;
    } else {
      a = c;
      b = d;
    }
  }
  if (n == 0) return {0, 1};
  return {a, b};
}

std::pair<std::uint64_t, std::uint64_t> fib_pair_u64(std::uint64_t n, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("fib_pair modulus must be >= 2");
  if (n == 0) return {0, 1};
  std::uint64_t a = 0, b = 1;
  for (int bit = 63 - std::countl_zero(n); bit >= 0; --bit) {
    const std::uint64_t t = (2 * static_cast<unsigned __int128>(b) + modulus - a) % modulus;
    const std::uint64_t c = mulmod(a, t, modulus);
    const std::uint64_t d = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(mulmod(a, a, modulus)) + mulmod(b, b, modulus)) % modulus);
    if ((n >> bit) & 1) {
      a = d;
      b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) + d) % modulus);
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b};
}

ApparitionRecord rank_of_apparition(std::uint64_t p) {
  const int f = split_type(p);  // rejects 5 and composites
  ApparitionRecord rec{p, f, 0, 0};
  std::uint64_t alpha = f == 1 ? p - 1 : p + 1;
  for (const auto& [r, e] : factor(alpha)) {
    for (int i = 0; i < e; ++i) {
      if (fib_pair_u64(alpha / r, p).first != 0) break;
      alpha /= r;
    }
  }
  rec.alpha = alpha;
  const mpz_class pz = static_cast<unsigned long>(p);
  mpz_class pj = pz;
  int e0 = 0;
  while (fib_pair(alpha, pj).first == 0) {
    ++e0;
    pj *= pz;
  }
  rec.e0 = e0;
  if (e0 < 1) throw Error(ErrorKind::InternalInconsistency, "rank of apparition does not divide");
  return rec;
}

int nu_p_fib(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("nu_p_fib needs n >= 1 (F_0 = 0)");
  if (p == 5) throw Error(ErrorKind::RamifiedPrime, "5 ramifies in Q(sqrt 5)");
  if (p == 2) {
    // Direct lifting modulo 2^j.
    int j = 0;
    mpz_class mod = 2;
    while (fib_pair(n, mod).first == 0) {
      ++j;
      mod *= 2;
    }
    return j;
  }
  const ApparitionRecord rec = rank_of_apparition(p);
  if (n % rec.alpha != 0) return 0;
  return rec.e0 + valuation(n / rec.alpha, p);
}

mpz_class primitive_part(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("primitive_part needs n >= 1");
  mpz_class c = fib_pair(n).first;
  mpz_class m = 5;
  for (const std::uint64_t d : divisors(n)) {
    if (d < n) m *= fib_pair(d).first;
  }
  // Strip every prime shared with 5 * prod_{d | n, d < n} F_d.
  mpz_class g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (g == 1) break;
    c /= g;
  }
  return c;
}

PrimitiveDivisorSet primitive_divisors(std::uint64_t n, const PrimitiveDivisorOptions& options) {
  if (n == 0) throw std::invalid_argument("primitive_divisors needs n >= 1");
  const Precision prec = options.precision;
  PrimitiveDivisorSet out;
  out.n = n;
  mpz_class cofactor = primitive_part(n);
  out.log_primitive_part = log(Interval::from_mpz(cofactor, prec));

  auto add = [&](const mpz_class& p, int e) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    if (!mpz_divisible_p(cofactor.get_mpz_t(), pe.get_mpz_t())) {
      throw Error(ErrorKind::InternalInconsistency, "primitive prime does not divide the primitive part");
    }
    cofactor /= pe;
    out.divisors.push_back({p, e});
  };

  // Candidates p = j n +- 1: a primitive divisor has rank of apparition n.
  for (std::uint64_t j = 1; cofactor != 1; ++j) {
    if (j * n > options.prime_budget + 1) break;
    for (const std::uint64_t p : {j * n - 1, j * n + 1}) {
      if (p < 2 || p > options.prime_budget || p == 5 || !is_prime(p)) continue;
      if (!mpz_divisible_ui_p(cofactor.get_mpz_t(), p)) continue;
      const ApparitionRecord rec = rank_of_apparition(p);
      if (rec.alpha != n) throw Error(ErrorKind::InternalInconsistency, "non-primitive prime in primitive part");
      add(static_cast<unsigned long>(p), nu_p_fib(p, n));
    }
  }

  bool resolved = cofactor == 1;
  if (!resolved) {
    // All remaining prime factors exceed the budget.
    const mpz_class budget = static_cast<unsigned long>(options.prime_budget);
    if (cofactor <= budget * budget) {
      const mpz_class last = cofactor;
      add(last, 1);
      resolved = true;
    }
  }
  if (!resolved && n <= options.exact_cutoff) {
    const BigFactorization fac = factor_big(cofactor, 2, options.rho_iterations);
    if (fac.complete) {
      for (const auto& [p, e] : fac.factors) add(p, e);
      out.primality_proven = fac.primality_proven;
      resolved = true;
    }
  }
  if (!resolved) {
    throw Error(ErrorKind::IncompleteFactorization,
                "primitive part of F_" + std::to_string(n) + " has an unfactored cofactor with " +
                    std::to_string(mpz_sizeinbase(cofactor.get_mpz_t(), 10)) + " digits");
  }
  std::sort(out.divisors.begin(), out.divisors.end(),
            [](const PrimitiveDivisor& x, const PrimitiveDivisor& y) { return x.p < y.p; });
  out.complete = true;
  return out;
}

EliouCheck eliou_check(std::uint64_t n, const PrimitiveDivisorSet& oracle_set, Precision prec) {
  if (n == 0 || oracle_set.n != n) throw std::invalid_argument("eliou_check: divisor set is for a different n");
  if (!oracle_set.complete) throw Error(ErrorKind::IncompleteFactorization, "divisor set is incomplete");
  EliouCheck out;
  out.n = n;
  out.in_regime = n >= 7 && n != 12;
  Interval lhs(prec);
  for (const PrimitiveDivisor& d : oracle_set.divisors) {
    lhs += Interval::from_int(d.exponent, prec) * log(Interval::from_mpz(d.p, prec));
  }
  const Interval log_eta = log(Interval::golden_ratio(prec));
  const Interval phi = Interval::from_mpz(mpz_class(static_cast<unsigned long>(euler_phi(n))), prec);
  const Interval two = Interval::from_int(2, prec);
  const Interval rhs = (phi * two * log_eta - two * log(Interval::from_mpz(mpz_class(static_cast<unsigned long>(n)), prec)) -
                        Interval::from_decimal("0.48", prec)) /
                       two;
  out.pass = certainly_less_equal(rhs, lhs);
  out.lhs = lhs;
  out.rhs = rhs;
  return out;
}

}  // namespace stewart
