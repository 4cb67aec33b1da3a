#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "stewart/interval.hpp"

namespace stewart {

class SplitPrimeTable;

/// Element a + b*eta of Z[eta], eta = (1 + sqrt 5) / 2, with eta^2 = eta + 1.
struct QuadInt {
  mpz_class a = 0;
  mpz_class b = 0;

  QuadInt() = default;
  QuadInt(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}
  QuadInt(long a_, long b_) : a(a_), b(b_) {}

  static QuadInt eta() { return {0, 1}; }
  /// gamma = eta / eta^sigma = -eta^2 = -1 - eta.
  static QuadInt gamma() { return {-1, -1}; }

  bool is_zero() const { return a == 0 && b == 0; }
  /// Conjugate under sigma: eta -> 1 - eta.
  QuadInt conj() const { return {a + b, -b}; }
  /// a^2 + ab - b^2.
  mpz_class norm() const { return a * a + a * b - b * b; }
  bool is_unit() const { return abs(norm()) == 1; }

  /// Real embeddings: first sends eta to (1+sqrt5)/2, second to (1-sqrt5)/2.
  Interval embed(Precision prec = kDefaultPrecision) const;
  Interval embed_conj(Precision prec = kDefaultPrecision) const;

  std::string to_string() const;

  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a == y.a && x.b == y.b; }
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadInt operator-(const QuadInt& x) { return {-x.a, -x.b}; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    const mpz_class bd = x.b * y.b;
    return {x.a * y.a + bd, x.a * y.b + x.b * y.a + bd};
  }
  QuadInt& operator*=(const QuadInt& y) { return *this = *this * y; }
};

/// Returns (norm(x), conj(x)).
std::pair<mpz_class, QuadInt> norm_and_conj(const QuadInt& x);

QuadInt pow(const QuadInt& x, std::uint64_t e);
/// eta^e for any integer e (eta^-1 = eta - 1).
QuadInt eta_pow(long e);

/// x / y when y divides x in Z[eta]; std::nullopt otherwise. y must be nonzero.
std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y);
bool divides(const QuadInt& y, const QuadInt& x);
/// Greatest common divisor up to units (Z[eta] is norm-Euclidean).
QuadInt gcd(QuadInt x, QuadInt y);
/// Exponent of the prime element pi in x (x nonzero).
int valuation(const QuadInt& x, const QuadInt& pi);

/// Residual degree of a rational prime p != 5: 1 if split, 2 if inert.
int split_type(std::uint64_t p);

/// Deterministic generator of a prime ideal above the split prime q: smallest
/// |b|, then smallest a >= 0, then positive norm, then positive b.
QuadInt prime_above(std::uint64_t q);

/// (numerator / denominator) * eta^(2 * unit_exponent).
struct QuadUnitFraction {
  QuadInt numerator{1, 0};
  QuadInt denominator{1, 0};
  long unit_exponent = 0;

  Interval embed(Precision prec = kDefaultPrecision) const;
  Interval embed_conj(Precision prec = kDefaultPrecision) const;
  /// Exact norm as a reduced rational p/q.
  mpq_class norm() const;
  std::string to_string() const;
};

/// theta_k: generator of q_k / q_k^sigma with norm 1, normalized so both real
/// embeddings lie in [eta^-1, eta].
QuadUnitFraction theta_generator(int k, const SplitPrimeTable& table, Precision prec = kDefaultPrecision);
QuadUnitFraction theta_generator_for_prime(std::uint64_t q, Precision prec = kDefaultPrecision);

/// Absolute logarithmic height in natural-log units.
struct Height {
  Interval value;
};

Height height(const QuadInt& x, Precision prec = kDefaultPrecision);
Height height(const QuadUnitFraction& x, Precision prec = kDefaultPrecision);

}  // namespace stewart
