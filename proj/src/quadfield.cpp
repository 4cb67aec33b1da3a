#include "stewart/quadfield.hpp"

#include <array>
#include <vector>

#include "stewart/error.hpp"
#include "stewart/numtheory.hpp"
#include "stewart/splitprimes.hpp"

namespace stewart {

namespace {

Interval log_plus(const Interval& x) { return max(log(abs(x)), Interval::from_int(0, Precision{x.precision()})); }

// Nearest integer to num / den, ties rounded down.
mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  q += mpq_class(1, 2);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

Interval QuadInt::embed(Precision prec) const {
  return Interval::from_mpz(a, prec) + Interval::from_mpz(b, prec) * Interval::golden_ratio(prec);
}

Interval QuadInt::embed_conj(Precision prec) const { return conj().embed(prec); }

std::string QuadInt::to_string() const {
  if (b == 0) return a.get_str();
  std::string out;
  if (a != 0) out = a.get_str();
  if (b == 1) {
    out += a != 0 ? "+eta" : "eta";
  } else if (b == -1) {
    out += "-eta";
  } else {
    out += (b > 0 && a != 0 ? "+" : "") + b.get_str() + "*eta";
  }
  return out;
}

std::pair<mpz_class, QuadInt> norm_and_conj(const QuadInt& x) { return {x.norm(), x.conj()}; }

QuadInt pow(const QuadInt& x, std::uint64_t e) {
  QuadInt result{1, 0};
  QuadInt base = x;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

QuadInt eta_pow(long e) {
  if (e >= 0) return pow(QuadInt::eta(), static_cast<std::uint64_t>(e));
  return pow(QuadInt{-1, 1}, static_cast<std::uint64_t>(-e));
}

std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y) {
  if (y.is_zero()) throw Error(ErrorKind::ZeroElement, "division by zero in Z[eta]");
  const mpz_class n = y.norm();
  const QuadInt t = x * y.conj();
  if (!mpz_divisible_p(t.a.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(t.b.get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  return QuadInt{t.a / n, t.b / n};
}

bool divides(const QuadInt& y, const QuadInt& x) { return exact_div(x, y).has_value(); }

QuadInt gcd(QuadInt x, QuadInt y) {
  while (!y.is_zero()) {
    const mpz_class n = y.norm();
    const QuadInt t = x * y.conj();
    const QuadInt q{round_div(t.a, n), round_div(t.b, n)};
    QuadInt r = x - q * y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int valuation(const QuadInt& x, const QuadInt& pi) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "valuation of zero");
  if (pi.is_unit()) throw Error(ErrorKind::InternalInconsistency, "valuation at a unit");
  int v = 0;
  QuadInt cur = x;
  while (auto next = exact_div(cur, pi)) {
    cur = std::move(*next);
    ++v;
  }
  return v;
}

int split_type(std::uint64_t p) {
  if (p == 5) throw Error(ErrorKind::RamifiedPrime, "5 ramifies in Q(sqrt 5)");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return legendre5(p) == 1 ? 1 : 2;
}

QuadInt prime_above(std::uint64_t q) {
  if (q == 5 || split_type(q) != 1) throw Error(ErrorKind::NotSplit, std::to_string(q) + " does not split");
  const mpz_class qz = static_cast<unsigned long>(q);
  struct Candidate {
    mpz_class a;
    bool positive_norm;
    bool positive_b;
    QuadInt value;
  };
  for (unsigned long bb = 1; bb <= q; ++bb) {
    std::vector<Candidate> found;
    for (const long sb : {1L, -1L}) {
      const mpz_class b = mpz_class(bb) * sb;
      for (const int sn : {1, -1}) {
        // a^2 + a b - b^2 = sn * q  <=>  a = (-b +- sqrt(5 b^2 + 4 sn q)) / 2
        const mpz_class disc = 5 * b * b + 4 * sn * qz;
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
        for (const mpz_class& twice_a : std::array<mpz_class, 2>{-b + root, -b - root}) {
          if (twice_a < 0 || mpz_odd_p(twice_a.get_mpz_t())) continue;
          QuadInt x{twice_a / 2, b};
          found.push_back({x.a, sn > 0, sb > 0, std::move(x)});
        }
      }
    }
    if (found.empty()) continue;
    const Candidate* best = &found.front();
    for (const Candidate& c : found) {
      const auto key = [](const Candidate& v) { return std::make_tuple(v.a, !v.positive_norm, !v.positive_b); };
      if (key(c) < key(*best)) best = &c;
    }
    if (abs(best->value.norm()) != qz) throw Error(ErrorKind::InternalInconsistency, "prime_above norm mismatch");
    return best->value;
  }
  throw Error(ErrorKind::InternalInconsistency, "no element of norm +-" + std::to_string(q));
}

Interval QuadUnitFraction::embed(Precision prec) const {
  return numerator.embed(prec) / denominator.embed(prec) * pow(Interval::golden_ratio(prec), 2 * unit_exponent);
}

Interval QuadUnitFraction::embed_conj(Precision prec) const {
  return numerator.embed_conj(prec) / denominator.embed_conj(prec) *
         pow(Interval::golden_ratio(prec), -2 * unit_exponent);
}

mpq_class QuadUnitFraction::norm() const {
  mpq_class out(numerator.norm(), denominator.norm());
  out.canonicalize();
  return out;
}

std::string QuadUnitFraction::to_string() const {
  std::string out = "(" + numerator.to_string() + ")/(" + denominator.to_string() + ")";
  if (unit_exponent != 0) out += "*eta^" + std::to_string(2 * unit_exponent);
  return out;
}

QuadUnitFraction theta_generator_for_prime(std::uint64_t q, Precision prec) {
  const QuadInt pi = prime_above(q);
  QuadUnitFraction theta{pi, pi.conj(), 0};
  for (mpfr_prec_t bits = prec.bits;; bits *= 2) {
    const Precision p{bits};
    const Interval eta = Interval::golden_ratio(p);
    const Interval log_eta = log(eta);
    const Interval t = log(abs(theta.embed(p))) / log_eta;
    // Smallest m with -1 <= t + 2m <= 1.
    const mpz_class lo = ceil_upper((Interval::from_int(-1, p) - t) / Interval::from_int(2, p));
    const mpz_class hi = floor_lower((Interval::from_int(1, p) - t) / Interval::from_int(2, p));
    if (lo <= hi) {
      theta.unit_exponent = lo.get_si();
      break;
    }
    if (bits > 8 * prec.bits) throw Error(ErrorKind::InternalInconsistency, "cannot normalize theta");
  }
  if (theta.norm() != 1) throw Error(ErrorKind::InternalInconsistency, "theta has norm != 1");
  return theta;
}

QuadUnitFraction theta_generator(int k, const SplitPrimeTable& table, Precision prec) {
  return theta_generator_for_prime(table.at(k), prec);
}

Height height(const QuadInt& x, Precision prec) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "height of zero");
  const Interval half = Interval::from_decimal("0.5", prec);
  return {half * (log_plus(x.embed(prec)) + log_plus(x.embed_conj(prec)))};
}

Height height(const QuadUnitFraction& x, Precision prec) {
  if (x.numerator.is_zero()) throw Error(ErrorKind::ZeroElement, "height of zero");
  if (x.denominator.is_zero()) throw Error(ErrorKind::ZeroElement, "zero denominator");
  // Reduce to coprime ideals; the finite places then contribute log |N(den)|.
  const QuadInt g = gcd(x.numerator, x.denominator);
  const QuadInt den = *exact_div(x.denominator, g);
  const Interval half = Interval::from_decimal("0.5", prec);
  const Interval finite = log(Interval::from_mpz(abs(den.norm()), prec));
  return {half * (finite + log_plus(x.embed(prec)) + log_plus(x.embed_conj(prec)))};
}

}  // namespace stewart
