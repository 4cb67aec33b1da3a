#include "stewart/numtheory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stewart {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

constexpr std::array<std::uint64_t, 13> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

std::uint64_t rho_u64(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = rho_u64(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (a % n == 0) continue;
    if (miller_rabin_witness(n, a % n, d, s)) return false;
  }
  return true;
}

Factorization factor(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor(0)");
  std::map<std::uint64_t, int> acc;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factor(n)) {
    const std::size_t count = out.size();
    std::uint64_t pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factor(n)) phi = phi / p * (p - 1);
  return phi;
}

int valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  mpz_class m = abs(n);
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int legendre5(std::uint64_t p) {
  const std::uint64_t r = p % 5;
  if (r == 0) throw std::invalid_argument("legendre5 undefined at multiples of 5");
  return (r == 1 || r == 4) ? 1 : -1;
}

Primality classify_prime(const mpz_class& n) {
  if (n < 2) return Primality::Composite;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(n.get_ui()) ? Primality::Prime : Primality::Composite;
  for (std::uint64_t p : kSmallPrimes) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
  }
  // Sorenson & Webster: the first 13 prime bases are decisive below this bound.
  static const mpz_class kMrBound("3317044064679887385961981");
  mpz_class d = n - 1;
  const auto s = static_cast<int>(mpz_scan1(d.get_mpz_t(), 0));
  d >>= s;
  const mpz_class nm1 = n - 1;
  auto witness = [&](unsigned long a) {
    mpz_class x;
    const mpz_class base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return false;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == nm1) return false;
    }
    return true;
  };
  for (std::uint64_t a : kSmallPrimes) {
    if (witness(static_cast<unsigned long>(a))) return Primality::Composite;
  }
  if (n < kMrBound) return Primality::Prime;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0 ? Primality::ProbablePrime : Primality::Composite;
}

namespace {

// Brent's variant of Pollard rho; returns 0 when the budget runs out.
mpz_class rho_big(const mpz_class& n, std::uint64_t budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 20; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1, t;
    std::uint64_t r = 1, used = 0;
    constexpr std::uint64_t m = 128;
    auto f = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          f(y);
          t = x - y;
          q = q * abs(t) % n;
        }
        used += steps;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && used < budget);
    if (g == 1) return 0;
    if (g == n) {
      do {
        f(ys);
        t = x - ys;
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

void factor_big_into(const mpz_class& n, std::uint64_t budget, std::map<mpz_class, int>& out,
                     BigFactorization& report) {
  if (n == 1) return;
  switch (classify_prime(n)) {
    case Primality::Prime:
      ++out[n];
      return;
    case Primality::ProbablePrime:
      ++out[n];
      report.primality_proven = false;
      return;
    case Primality::Composite:
      break;
  }
  const mpz_class d = rho_big(n, budget);
  if (d == 0) {
    report.complete = false;
    report.unfactored *= n;
    return;
  }
  factor_big_into(d, budget, out, report);
  factor_big_into(n / d, budget, out, report);
}

}  // namespace

BigFactorization factor_big(mpz_class n, std::uint64_t trial_limit, std::uint64_t rho_iterations) {
  if (n == 0) throw std::invalid_argument("factor_big(0)");
  n = abs(n);
  BigFactorization report;
  std::map<mpz_class, int> acc;
  for (std::uint64_t p = 2; p < trial_limit; p += (p == 2 ? 1 : 2)) {
    if (!is_prime(p)) continue;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++acc[mpz_class(static_cast<unsigned long>(p))];
      n /= static_cast<unsigned long>(p);
    }
    if (n == 1) break;
  }
  factor_big_into(n, rho_iterations, acc, report);
  report.factors.assign(acc.begin(), acc.end());
  return report;
}

}  // namespace stewart
