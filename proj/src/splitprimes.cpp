#include "stewart/splitprimes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stewart/error.hpp"
#include "stewart/interval.hpp"

namespace stewart {

namespace {

constexpr std::uint64_t kOpenEnd = std::numeric_limits<std::uint64_t>::max();

bool is_split_residue(std::uint64_t n) {
  const std::uint64_t r = n % 5;
  return r == 1 || r == 4;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd primes up to limit, simple sieve.
std::vector<std::uint32_t> odd_primes_upto(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 3) return out;
  std::vector<char> composite(limit / 2 + 1, 0);  // index i <-> 2i+1
  for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    out.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = 1;
  }
  return out;
}

class BasePrimes {
 public:
  /// Ensures every odd prime <= sqrt(hi) is available.
  const std::vector<std::uint32_t>& covering(std::uint64_t hi) {
    const std::uint64_t need = isqrt(hi) + 1;
    if (need > limit_) {
      limit_ = std::max(need, 2 * limit_);
      primes_ = odd_primes_upto(limit_);
    }
    return primes_;
  }

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
};

struct Segment {
  std::uint64_t lo = 0;  // odd
  std::uint64_t hi = 0;  // exclusive
};

// Sieves the odd numbers of [seg.lo, seg.hi) and appends the split primes.
void sieve_segment(const Segment& seg, const std::vector<std::uint32_t>& base, std::vector<char>& flags,
                   std::vector<std::uint64_t>& out) {
  out.clear();
  if (seg.hi <= seg.lo) return;
  const std::uint64_t count = (seg.hi - seg.lo + 1) / 2;
  flags.assign(count, 0);
  const std::uint64_t last = seg.lo + 2 * (count - 1);
  for (const std::uint32_t p32 : base) {
    const std::uint64_t p = p32;
    if (p * p > last) break;
    std::uint64_t m = std::max(p * p, (seg.lo + p - 1) / p * p);
    if (m % 2 == 0) m += p;
    for (std::uint64_t j = (m - seg.lo) / 2; j < count; j += p) flags[j] = 1;
  }
  for (std::uint64_t j = 0; j < count; ++j) {
    const std::uint64_t n = seg.lo + 2 * j;
    if (!flags[j] && n > 1 && is_split_residue(n)) out.push_back(n);
  }
}

Segment next_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t odds) {
  const std::uint64_t span = 2 * odds;
  const std::uint64_t end = (hi - lo > span) ? lo + span : hi;
  return {lo, end};
}

std::uint64_t odd_start(std::uint64_t lo) { return lo % 2 == 0 ? lo + 1 : lo; }

int resolve_threads(const SieveConfig& config) {
  if (config.threads > 0) return config.threads;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

void sieve_split_primes_serial(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                               const SplitPrimeSink& sink) {
  BasePrimes base;
  std::vector<char> flags;
  std::vector<std::uint64_t> out;
  for (std::uint64_t cur = odd_start(lo); cur < hi;) {
    const Segment seg = next_segment(cur, hi, config.segment_odds);
    sieve_segment(seg, base.covering(seg.hi), flags, out);
    if (!sink(out, seg.hi)) return;
    cur = seg.hi;
  }
}

void sieve_split_primes(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config, const SplitPrimeSink& sink) {
  const int threads = resolve_threads(config);
  if (threads <= 1) {
    sieve_split_primes_serial(lo, hi, config, sink);
    return;
  }
  BasePrimes base;
  const std::size_t batch = 2 * static_cast<std::size_t>(threads);
  std::vector<Segment> segments;
  std::vector<std::vector<std::uint64_t>> outs(batch);
  std::vector<std::vector<char>> flags(batch);
  for (std::uint64_t cur = odd_start(lo); cur < hi;) {
    segments.clear();
    while (segments.size() < batch && cur < hi) {
      segments.push_back(next_segment(cur, hi, config.segment_odds));
      cur = segments.back().hi;
    }
    const auto& primes = base.covering(segments.back().hi);
    const auto n = static_cast<std::int64_t>(segments.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      sieve_segment(segments[i], primes, flags[i], outs[i]);
    }
    for (std::int64_t i = 0; i < n; ++i) {
      if (!sink(outs[i], segments[i].hi)) return;
    }
  }
}

SplitPrimeTable::SplitPrimeTable(std::vector<std::uint64_t> primes, std::uint64_t complete_to)
    : primes_(std::move(primes)), complete_to_(complete_to) {}

std::uint64_t SplitPrimeTable::at(int k) const {
  if (k < kStartIndex || k > max_index()) {
    throw Error(ErrorKind::InsufficientPrimes,
                "q_" + std::to_string(k) + " requested but table holds q_2..q_" + std::to_string(max_index()));
  }
  return primes_[static_cast<std::size_t>(k - kStartIndex)];
}

std::size_t SplitPrimeTable::count_up_to(std::uint64_t x) const {
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::optional<int> SplitPrimeTable::index_of(std::uint64_t q) const {
  const auto it = std::lower_bound(primes_.begin(), primes_.end(), q);
  if (it == primes_.end() || *it != q) return std::nullopt;
  return kStartIndex + static_cast<int>(it - primes_.begin());
}

SplitPrimeTable enumerate_split_primes_upto(std::uint64_t upper, const SieveConfig& config) {
  std::vector<std::uint64_t> primes;
  sieve_split_primes(0, upper + 1, config, [&](std::span<const std::uint64_t> block, std::uint64_t) {
    primes.insert(primes.end(), block.begin(), block.end());
    return true;
  });
  return SplitPrimeTable(std::move(primes), upper);
}

SplitPrimeTable enumerate_split_primes_count(std::size_t count, const SieveConfig& config) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  std::uint64_t covered = 0;
  if (count > 0) {
    sieve_split_primes(0, kOpenEnd, config, [&](std::span<const std::uint64_t> block, std::uint64_t) {
      const std::size_t take = std::min(block.size(), count - primes.size());
      primes.insert(primes.end(), block.begin(), block.begin() + static_cast<std::ptrdiff_t>(take));
      return primes.size() < count;
    });
    covered = primes.back();
  }
  return SplitPrimeTable(std::move(primes), covered);
}

namespace {

struct QkChecker {
  explicit QkChecker(const std::string& exponent_text)
      : exponent(Interval::from_decimal(exponent_text)),
        eta(Interval::golden_ratio()),
        exponent_lo(exponent.lower()),
        exponent_hi(exponent.upper()) {}

  // Certified eta * q < k^exponent. The double test settles all but the
  // near-ties; a relative margin of 1e-9 dominates its rounding errors.
  bool holds(std::uint64_t q, std::int64_t k) const {
    const double lhs = 1.6180339887498949 * static_cast<double>(q);
    const auto kd = static_cast<double>(k);
    if (lhs * (1 + 1e-9) < std::pow(kd, exponent_lo) * (1 - 1e-9)) return true;
    if (lhs * (1 - 1e-9) > std::pow(kd, exponent_hi) * (1 + 1e-9)) return false;
    return holds_exact(q, k);
  }

  bool holds_exact(std::uint64_t q, std::int64_t k) const {
    const Interval lhs = eta * Interval::from_mpz(mpz_class(static_cast<unsigned long>(q)));
    const Interval base = Interval::from_int(static_cast<long>(k));
    // k >= 1 so k^e increases with e: the lower end of the exponent gives the safe side.
    const Interval rhs = pow(base, Interval::from_endpoints(exponent.lo(), exponent.lo()));
    return certainly_less(lhs, rhs);
  }

  Interval exponent;
  Interval eta;
  double exponent_lo;
  double exponent_hi;
};

}  // namespace

QkReport verify_qk_bound(const QkQuery& query, const SieveConfig& config, const std::optional<QkProgress>& resume,
                         const std::function<void(const QkProgress&)>& on_progress) {
  if (query.k_from < SplitPrimeTable::kStartIndex) throw Error(ErrorKind::HypothesisViolation, "k_from must be >= 2");
  const QkChecker checker(query.exponent);
  if (!(checker.exponent.is_positive() && certainly_less(Interval::from_int(1), checker.exponent))) {
    throw Error(ErrorKind::HypothesisViolation, "exponent must exceed 1");
  }
  QkReport report;
  report.k_from = query.k_from;
  report.k_to = query.k_to;
  report.exponent = query.exponent;
  if (query.k_to < query.k_from) return report;

  const int threads = resolve_threads(config);
  std::int64_t k = resume ? resume->next_k : SplitPrimeTable::kStartIndex;
  const std::uint64_t low = resume ? resume->next_low : 0;

  sieve_split_primes(low, kOpenEnd, config, [&](std::span<const std::uint64_t> block, std::uint64_t covered_to) {
    const auto n = static_cast<std::int64_t>(block.size());
    const std::int64_t block_k0 = k;
    // Index range of this block that falls inside [k_from, k_to].
    const std::int64_t i_begin = std::clamp<std::int64_t>(query.k_from - block_k0, 0, n);
    const std::int64_t i_end = std::clamp<std::int64_t>(query.k_to - block_k0 + 1, 0, n);
    std::int64_t first_fail = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for reduction(min : first_fail) schedule(static) num_threads(threads) if (threads > 1)
    for (std::int64_t i = i_begin; i < i_end; ++i) {
      if (!checker.holds(block[i], block_k0 + i)) first_fail = std::min(first_fail, i);
    }
    if (i_end > i_begin) {
      report.checked += i_end - i_begin;
      report.last_q = block[i_end - 1];
    }
    k += n;
    if (first_fail != std::numeric_limits<std::int64_t>::max()) {
      report.pass = false;
      report.first_fail_k = block_k0 + first_fail;
      report.first_fail_q = block[first_fail];
      report.last_q = block[first_fail];
      report.checked = *report.first_fail_k - query.k_from + 1;
      return false;
    }
    if (on_progress) on_progress(QkProgress{covered_to, k});
    return k <= query.k_to;
  });
  return report;
}

QkReport verify_qk_bound_reference(const QkQuery& query) {
  const QkChecker checker(query.exponent);
  QkReport report;
  report.k_from = query.k_from;
  report.k_to = query.k_to;
  report.exponent = query.exponent;
  if (query.k_to < query.k_from) return report;
  std::int64_t k = SplitPrimeTable::kStartIndex;
  sieve_split_primes_serial(0, kOpenEnd, SieveConfig{std::uint64_t{1} << 16, 1},
                            [&](std::span<const std::uint64_t> block, std::uint64_t) {
                              for (const std::uint64_t q : block) {
                                if (k >= query.k_from) {
                                  ++report.checked;
                                  report.last_q = q;
                                  if (!checker.holds_exact(q, k)) {
                                    report.pass = false;
                                    report.first_fail_k = k;
                                    report.first_fail_q = q;
                                    return false;
                                  }
                                }
                                if (++k > query.k_to) return false;
                              }
                              return true;
                            });
  return report;
}

void write_split_prime_cache(const SplitPrimeTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path.string());
  out << "SPLITPRIMES v1 " << table.complete_to() << '\n';
  for (const std::uint64_t q : table.primes()) out << q << '\n';
  if (!out) throw std::runtime_error("failed writing cache file: " + path.string());
}

SplitPrimeTable read_split_prime_cache(const std::filesystem::path& path, const SieveConfig& config) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InternalInconsistency, "cannot open cache file " + path.string());
  std::string line;
  std::getline(in, line);
  std::istringstream header(line);
  std::string magic, version;
  std::uint64_t upper = 0;
  if (!(header >> magic >> version >> upper) || magic != "SPLITPRIMES" || version != "v1") {
    throw Error(ErrorKind::InternalInconsistency, "bad cache header: " + line);
  }
  std::vector<std::uint64_t> primes;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t used = 0;
    const std::uint64_t q = std::stoull(line, &used);
    if (used != line.size() || q > upper || !is_split_residue(q) || (!primes.empty() && q <= primes.back())) {
      throw Error(ErrorKind::InternalInconsistency, "bad cache entry: " + line);
    }
    primes.push_back(q);
  }
  // Recompute the final segment and compare.
  const std::uint64_t span = 2 * config.segment_odds;
  const std::uint64_t from = upper > span ? upper - span : 0;
  std::vector<std::uint64_t> expected;
  sieve_split_primes_serial(from, upper + 1, config, [&](std::span<const std::uint64_t> block, std::uint64_t) {
    expected.insert(expected.end(), block.begin(), block.end());
    return true;
  });
  const auto tail = std::lower_bound(primes.begin(), primes.end(), from);
  if (!std::equal(tail, primes.end(), expected.begin(), expected.end())) {
    throw Error(ErrorKind::InternalInconsistency, "cache final segment does not match a fresh sieve");
  }
  return SplitPrimeTable(std::move(primes), upper);
}

}  // namespace stewart
