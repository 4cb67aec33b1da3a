#include "stewart/interval.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <utility>

namespace stewart {

Real::Real(Precision prec) { mpfr_init2(value_, prec.bits); }

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {

Precision joint(const Interval& a, const Interval& b) {
  return Precision{std::max(a.precision(), b.precision())};
}

Precision of(const Interval& a) { return Precision{a.precision()}; }

// Applies a binary MPFR op to every corner pair and keeps the extreme results.
template <typename Op>
std::pair<Real, Real> corner_extremes(const Interval& a, const Interval& b, Precision prec, Op op) {
  const std::array<mpfr_srcptr, 2> xs{a.lo().get(), a.hi().get()};
  const std::array<mpfr_srcptr, 2> ys{b.lo().get(), b.hi().get()};
  Real lo(prec), hi(prec), tmp(prec);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      op(tmp.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), lo.get())) mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
      op(tmp.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), hi.get())) mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace

Interval::Interval(Precision prec) : lo_(prec), hi_(prec) {
  mpfr_set_zero(lo_.get(), 1);
  mpfr_set_zero(hi_.get(), 1);
}

Interval Interval::from_int(long value, Precision prec) {
  Real lo(prec), hi(prec);
  mpfr_set_si(lo.get(), value, MPFR_RNDD);
  mpfr_set_si(hi.get(), value, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_mpz(const mpz_class& value, Precision prec) {
  Real lo(prec), hi(prec);
  mpfr_set_z(lo.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), value.get_mpz_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_decimal(std::string_view text, Precision prec) {
  const std::string s(text);
  Real lo(prec), hi(prec);
  if (mpfr_set_str(lo.get(), s.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(hi.get(), s.c_str(), 10, MPFR_RNDU) != 0) {
    throw std::invalid_argument("not a decimal literal: " + s);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_endpoints(const Real& lo, const Real& hi) {
  if (mpfr_greater_p(lo.get(), hi.get())) throw std::invalid_argument("interval endpoints out of order");
  return Interval(lo, hi);
}

Interval Interval::golden_ratio(Precision prec) {
  Interval five = from_int(5, prec);
  return (from_int(1, prec) + sqrt(five)) / from_int(2, prec);
}

double Interval::lower() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

double Interval::mid() const {
  Real m(Precision{precision() + 1});
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

double Interval::relative_width() const {
  Real w(of(*this));
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  if (mpfr_zero_p(w.get())) return 0.0;
  Real m(of(*this));
  if (mpfr_sgn(lo_.get()) > 0) {
    mpfr_set(m.get(), lo_.get(), MPFR_RNDD);
  } else if (mpfr_sgn(hi_.get()) < 0) {
    mpfr_neg(m.get(), hi_.get(), MPFR_RNDD);
  } else {
    return std::numeric_limits<double>::infinity();
  }
  mpfr_div(w.get(), w.get(), m.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
bool Interval::is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

namespace {

std::string format(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(digits) + "R" + (rnd == MPFR_RNDU ? "U" : "D") + "g";
  mpfr_asprintf(&buf, fmt.c_str(), x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

std::string Interval::upper_string(int digits) const { return format(hi_.get(), digits, MPFR_RNDU); }
std::string Interval::lower_string(int digits) const { return format(lo_.get(), digits, MPFR_RNDD); }

Interval Interval::operator-() const {
  Real lo(of(*this)), hi(of(*this));
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator+(const Interval& a, const Interval& b) {
  const Precision prec = joint(a, b);
  Real lo(prec), hi(prec);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  const Precision prec = joint(a, b);
  Real lo(prec), hi(prec);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  auto [lo, hi] = corner_extremes(a, b, joint(a, b), mpfr_mul);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  auto [lo, hi] = corner_extremes(a, b, joint(a, b), mpfr_div);
  return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& x) {
  if (!x.is_positive()) throw std::domain_error("log of a non-positive interval");
  Real lo(of(x)), hi(of(x));
  mpfr_log(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval exp(const Interval& x) {
  Real lo(of(x)), hi(of(x));
  mpfr_exp(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_.get()) < 0) throw std::domain_error("sqrt of a negative interval");
  Real lo(of(x)), hi(of(x));
  mpfr_sqrt(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo_.get()) >= 0) return x;
  if (mpfr_sgn(x.hi_.get()) <= 0) return -x;
  Real lo(of(x)), hi(of(x));
  mpfr_set_zero(lo.get(), 1);
  mpfr_neg(hi.get(), x.lo_.get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), x.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& base, const Interval& exponent) {
  if (!base.is_positive()) throw std::domain_error("pow requires a positive base");
  // x^y is monotone in each argument separately on x > 0, so the extremes sit at corners.
  auto [lo, hi] = corner_extremes(base, exponent, joint(base, exponent), mpfr_pow);
  return Interval(std::move(lo), std::move(hi));
}

Interval pow(const Interval& base, long exponent) {
  if (exponent == 0) return Interval::from_int(1, of(base));
  if (exponent < 0) return Interval::from_int(1, of(base)) / pow(base, -exponent);
  const Precision prec = of(base);
  Real lo(prec), hi(prec);
  const bool even = exponent % 2 == 0;
  if (mpfr_sgn(base.lo_.get()) >= 0 || !even) {
    mpfr_pow_si(lo.get(), base.lo_.get(), exponent, MPFR_RNDD);
    mpfr_pow_si(hi.get(), base.hi_.get(), exponent, MPFR_RNDU);
  } else if (mpfr_sgn(base.hi_.get()) <= 0) {
    mpfr_pow_si(lo.get(), base.hi_.get(), exponent, MPFR_RNDD);
    mpfr_pow_si(hi.get(), base.lo_.get(), exponent, MPFR_RNDU);
  } else {
    Interval m = abs(base);
    mpfr_set_zero(lo.get(), 1);
    mpfr_pow_si(hi.get(), m.hi_.get(), exponent, MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval hull(const Interval& a, const Interval& b) {
  const Precision prec = joint(a, b);
  Real lo(prec), hi(prec);
  mpfr_min(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval max(const Interval& a, const Interval& b) {
  const Precision prec = joint(a, b);
  Real lo(prec), hi(prec);
  mpfr_max(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval min(const Interval& a, const Interval& b) {
  const Precision prec = joint(a, b);
  Real lo(prec), hi(prec);
  mpfr_min(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_min(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval log_factorial(std::uint64_t n, Precision prec) {
  // Exact partial products of about 4096 bits, one outward log per block.
  Real lo(prec), hi(prec), block(prec);
  mpfr_set_zero(lo.get(), 1);
  mpfr_set_zero(hi.get(), 1);
  mpz_class product = 1;
  auto flush = [&] {
    mpfr_set_z(block.get(), product.get_mpz_t(), MPFR_RNDD);
    mpfr_log(block.get(), block.get(), MPFR_RNDD);
    mpfr_add(lo.get(), lo.get(), block.get(), MPFR_RNDD);
    mpfr_set_z(block.get(), product.get_mpz_t(), MPFR_RNDU);
    mpfr_log(block.get(), block.get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), block.get(), MPFR_RNDU);
    product = 1;
  };
  for (std::uint64_t i = 2; i <= n; ++i) {
    mpz_mul_ui(product.get_mpz_t(), product.get_mpz_t(), static_cast<unsigned long>(i));
    if (mpz_sizeinbase(product.get_mpz_t(), 2) > 4096) flush();
  }
  flush();
  return Interval::from_endpoints(lo, hi);
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi().get(), b.lo().get()); }

bool certainly_less_equal(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.hi().get(), b.lo().get());
}

mpz_class ceil_upper(const Interval& x) {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), x.hi().get(), MPFR_RNDU);
  return out;
}

mpz_class floor_lower(const Interval& x) {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), x.lo().get(), MPFR_RNDD);
  return out;
}

}  // namespace stewart

namespace stewart {

namespace {

std::string exact_string(const Real& r) {
  char* text = nullptr;
  if (mpfr_asprintf(&text, "%Ra", r.get()) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

Real exact_parse(std::string_view text, Precision prec) {
  Real r(prec);
  const std::string owned(text);
  char* end = nullptr;
  mpfr_strtofr(r.get(), owned.c_str(), &end, 0, MPFR_RNDN);
  if (owned.empty() || end != owned.c_str() + owned.size()) {
    throw std::invalid_argument("not an exact float: " + owned);
  }
  return r;
}

}  // namespace

std::string Interval::exact_lower() const { return exact_string(lo_); }
std::string Interval::exact_upper() const { return exact_string(hi_); }

Interval Interval::from_exact(std::string_view lo, std::string_view hi, Precision prec) {
  return from_endpoints(exact_parse(lo, prec), exact_parse(hi, prec));
}

bool operator==(const Interval& a, const Interval& b) {
  auto same = [](const Real& x, const Real& y) {
    return x.precision() == y.precision() &&
           (mpfr_equal_p(x.get(), y.get()) || (mpfr_nan_p(x.get()) && mpfr_nan_p(y.get()))) &&
           mpfr_signbit(x.get()) == mpfr_signbit(y.get());
  };
  return same(a.lo_, b.lo_) && same(a.hi_, b.hi_);
}

}  // namespace stewart
