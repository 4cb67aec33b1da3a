#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stewart {

struct SieveConfig {
  /// Odd numbers per segment.
  std::uint64_t segment_odds = std::uint64_t{1} << 20;
  /// 0 means the OpenMP default; 1 forces the serial kernel.
  int threads = 0;
};

/// Receives consecutive ascending blocks of split primes together with the
/// exclusive upper end of the range sieved so far; return false to stop.
using SplitPrimeSink = std::function<bool(std::span<const std::uint64_t> primes, std::uint64_t covered_to)>;

/// Split primes in [lo, hi) via a classic segmented sieve (single thread).
void sieve_split_primes_serial(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config,
                               const SplitPrimeSink& sink);
/// Same contract; segments are sieved concurrently and delivered in order.
/// `hi` may be UINT64_MAX for an open-ended stream.
void sieve_split_primes(std::uint64_t lo, std::uint64_t hi, const SieveConfig& config, const SplitPrimeSink& sink);

/// q_2 = 11, q_3 = 19, ...: every prime = +-1 (mod 5) up to complete_to.
class SplitPrimeTable {
 public:
  static constexpr int kStartIndex = 2;

  SplitPrimeTable() = default;
  SplitPrimeTable(std::vector<std::uint64_t> primes, std::uint64_t complete_to);

  /// q_k; throws InsufficientPrimes when k is outside the table.
  std::uint64_t at(int k) const;
  int max_index() const { return kStartIndex + static_cast<int>(primes_.size()) - 1; }
  std::size_t size() const { return primes_.size(); }
  std::uint64_t complete_to() const { return complete_to_; }
  std::span<const std::uint64_t> primes() const { return primes_; }

  /// Number of entries <= x.
  std::size_t count_up_to(std::uint64_t x) const;
  /// k with q_k = q, if q is in the table.
  std::optional<int> index_of(std::uint64_t q) const;

 private:
  std::vector<std::uint64_t> primes_;
  std::uint64_t complete_to_ = 0;
};

SplitPrimeTable enumerate_split_primes_upto(std::uint64_t upper, const SieveConfig& config = {});
SplitPrimeTable enumerate_split_primes_count(std::size_t count, const SieveConfig& config = {});

/// Resume point for long verification runs.
struct QkProgress {
  std::uint64_t next_low = 0;  // sieve restarts here
  std::int64_t next_k = 2;     // index of the first split prime >= next_low

  friend bool operator==(const QkProgress&, const QkProgress&) = default;
};

struct QkQuery {
  std::int64_t k_from = 2;
  std::int64_t k_to = 2;
  std::string exponent = "1.3";  // decimal; enclosed outward, lower end used
};

struct QkReport {
  std::int64_t k_from = 0;
  std::int64_t k_to = 0;
  std::string exponent;
  bool pass = true;
  std::optional<std::int64_t> first_fail_k;
  std::optional<std::uint64_t> first_fail_q;
  std::int64_t checked = 0;
  std::uint64_t last_q = 0;

  friend bool operator==(const QkReport&, const QkReport&) = default;
};

/// Checks eta * q_k < k^exponent for k_from <= k <= k_to with eta rounded up
/// and k^exponent rounded down. Streams primes; nothing is materialized.
QkReport verify_qk_bound(const QkQuery& query, const SieveConfig& config = {},
                         const std::optional<QkProgress>& resume = std::nullopt,
                         const std::function<void(const QkProgress&)>& on_progress = {});
/// Reference implementation: plain loop, MPFR interval check for every k.
QkReport verify_qk_bound_reference(const QkQuery& query);

/// Cache file: "SPLITPRIMES v1 <upper>" then one decimal prime per line.
void write_split_prime_cache(const SplitPrimeTable& table, const std::filesystem::path& path);
/// Throws Error(InternalInconsistency) when the header is malformed or the
/// recomputed final segment disagrees with the file.
SplitPrimeTable read_split_prime_cache(const std::filesystem::path& path, const SieveConfig& config = {});

}  // namespace stewart
