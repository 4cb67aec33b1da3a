#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stewart {

/// Working precision in bits for MPFR-backed quantities.
struct Precision {
  mpfr_prec_t bits = 128;
};

inline constexpr Precision kDefaultPrecision{128};

/// Owning wrapper around an mpfr_t.
class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] of reals with MPFR endpoints.
///
/// Every operation rounds the lower endpoint toward -inf and the upper toward
/// +inf, so the true value of an expression is always contained in the
/// interval computed for it. Callers that need a certified upper bound read
/// hi(); certified comparisons use certainly_less() and friends.
class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision);

  static Interval from_int(long value, Precision prec = kDefaultPrecision);
  static Interval from_mpz(const mpz_class& value, Precision prec = kDefaultPrecision);
  /// Decimal literal such as "50233.5" or "1e-30"; enclosed outward.
  static Interval from_decimal(std::string_view text, Precision prec = kDefaultPrecision);
  static Interval from_endpoints(const Real& lo, const Real& hi);
  static Interval golden_ratio(Precision prec = kDefaultPrecision);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  /// Endpoints converted to double with outward rounding.
  double lower() const;
  double upper() const;
  double mid() const;
  /// Relative width (hi - lo) / |mid|, rounded up; 0 for a point interval at 0.
  double relative_width() const;

  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0

  /// Upper endpoint as decimal with `digits` significant digits, rounded up.
  std::string upper_string(int digits = 20) const;
  std::string lower_string(int digits = 20) const;

  /// Endpoints as exact hexadecimal floats ("0x1.8p+1"); lossless.
  std::string exact_lower() const;
  std::string exact_upper() const;
  /// Inverse of exact_lower/exact_upper; throws std::invalid_argument on bad text.
  static Interval from_exact(std::string_view lo, std::string_view hi, Precision prec);

  /// Identical endpoints and precision (not set equality of reals).
  friend bool operator==(const Interval& a, const Interval& b);

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }
  Interval& operator/=(const Interval& b) { return *this = *this / b; }

 private:
  Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval sqrt(const Interval& x);
  friend Interval abs(const Interval& x);
  friend Interval pow(const Interval& base, const Interval& exponent);
  friend Interval pow(const Interval& base, long exponent);
  friend Interval hull(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);

  Real lo_;
  Real hi_;
};

/// Requires x > 0; throws std::domain_error otherwise.
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval sqrt(const Interval& x);
Interval abs(const Interval& x);
/// base > 0 required.
Interval pow(const Interval& base, const Interval& exponent);
Interval pow(const Interval& base, long exponent);
Interval hull(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

/// log((n)!) = sum_{i=1}^{n} log i, accumulated with outward rounding.
Interval log_factorial(std::uint64_t n, Precision prec = kDefaultPrecision);

// Certified comparisons: true only when the relation holds for every pair of
// points in the two intervals.
bool certainly_less(const Interval& a, const Interval& b);
bool certainly_less_equal(const Interval& a, const Interval& b);
inline bool certainly_greater(const Interval& a, const Interval& b) { return certainly_less(b, a); }

/// Smallest integer >= every point of x (ceiling of the upper endpoint).
mpz_class ceil_upper(const Interval& x);
/// Largest integer <= every point of x (floor of the lower endpoint).
mpz_class floor_lower(const Interval& x);

}  // namespace stewart
