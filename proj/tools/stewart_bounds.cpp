// stewart-bounds: command-line front end for the bound computations.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "stewart/bounds.hpp"
#include "stewart/cyclotomic.hpp"
#include "stewart/error.hpp"
#include "stewart/fiboracle.hpp"
#include "stewart/report.hpp"
#include "stewart/splitprimes.hpp"

namespace fs = std::filesystem;
using namespace stewart;

namespace {

constexpr int kExitHypothesis = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitInternal = 4;

// q_k > 3375517771 = q_80802434 closes the sieve branch of the q_k estimate.
constexpr std::int64_t kFullQkRange = 80802434;

struct RunConfig {
  long precision_bits = 128;
  std::string format = "human";
  std::string cache_dir;
  int parallelism = 0;

  Precision precision() const { return Precision{precision_bits}; }
  Format output() const { return parse_format(format); }

  std::optional<fs::path> cache() const {
    if (const char* env = std::getenv("STEWART_BOUNDS_CACHE"); env && *env) return fs::path(env);
    if (!cache_dir.empty()) return fs::path(cache_dir);
    return std::nullopt;
  }
};

mpz_class parse_integer(const std::string& text) {
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) throw CLI::ValidationError("--kappa", "not an integer: " + text);
  return z;
}

// Checkpoint file: "next_low next_k checked last_q".
struct Checkpoint {
  QkProgress progress;
  std::int64_t checked = 0;
  std::uint64_t last_q = 0;
};

std::optional<Checkpoint> load_checkpoint(const fs::path& path) {
  std::ifstream in(path);
  Checkpoint c;
  if (in >> c.progress.next_low >> c.progress.next_k >> c.checked >> c.last_q) return c;
  return std::nullopt;
}

void store_checkpoint(const fs::path& path, const Checkpoint& c) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << c.progress.next_low << ' ' << c.progress.next_k << ' ' << c.checked << ' ' << c.last_q << '\n';
  }
  fs::rename(tmp, path);
}

int finish(const std::string& text, bool pass) {
  std::cout << text;
  return pass ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit bounds for primitive divisors of Fibonacci numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  app.add_option("--precision", config.precision_bits, "Working precision in bits")
      ->check(CLI::Range(64L, 1L << 20));
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--cache-dir", config.cache_dir, "Directory for checkpoints (STEWART_BOUNDS_CACHE overrides)");
  app.add_option("--parallelism", config.parallelism, "Worker threads (default: all)")->check(CLI::Range(1, 4096));

  // n0
  auto* n0_cmd = app.add_subcommand("n0", "Smallest n0 with a primitive divisor >= (kappa+1)n-1 for n >= e^n0");
  std::string kappa_text = "1";
  std::optional<int> fixed_k, k_from, k_to;
  n0_cmd->add_option("--kappa", kappa_text, "kappa >= 1")->required();
  n0_cmd->add_option("--k", fixed_k, "Evaluate at this k only")->check(CLI::Range(kMinK, 100000));
  n0_cmd->add_option("--k-from", k_from, "First k of the scan")->check(CLI::Range(kMinK, 100000));
  n0_cmd->add_option("--k-to", k_to, "Last k of the scan")->check(CLI::Range(kMinK, 100000));

  // tables
  auto* tables_cmd = app.add_subcommand("tables", "Recompute the n0 tables");
  int which = 1;
  tables_cmd->add_option("--which", which, "1: kappa = 1..10; 2: kappa = 20..10^6")->check(CLI::IsMember({1, 2}));

  // verify-qk
  auto* qk_cmd = app.add_subcommand("verify-qk", "Check eta q_k < k^a over a range of k");
  QkQuery qk_query{500000, 2000000, "1.3"};
  bool qk_full = false;
  qk_cmd->add_option("--from", qk_query.k_from, "First k")->check(CLI::Range(std::int64_t{2}, kFullQkRange * 100));
  qk_cmd->add_option("--to", qk_query.k_to, "Last k");
  qk_cmd->add_option("--exponent", qk_query.exponent, "Exponent a (decimal)");
  qk_cmd->add_flag("--full", qk_full, "Run to k = 80802434 with checkpoints in the cache directory");

  // primitive
  auto* prim_cmd = app.add_subcommand("primitive", "Primitive prime divisors of F_n");
  std::uint64_t n_from = 0, n_to = 0;
  std::optional<std::uint64_t> n_single;
  PrimitiveDivisorOptions prim_options;
  prim_cmd->add_option("--n", n_single, "Index n")->check(CLI::PositiveNumber);
  prim_cmd->add_option("--from", n_from, "First n")->check(CLI::PositiveNumber);
  prim_cmd->add_option("--to", n_to, "Last n")->check(CLI::PositiveNumber);
  prim_cmd->add_option("--budget", prim_options.prime_budget, "Candidate bound for p = jn +- 1");

  // cyclotomic
  auto* cyc_cmd = app.add_subcommand("cyclotomic", "Phi_n(gamma): norm identity, Schinzel bound, Schwarz sweep");
  std::optional<std::uint64_t> cyc_single, schwarz_max;
  std::uint64_t cyc_from = 0, cyc_to = 0;
  cyc_cmd->add_option("--n", cyc_single, "Index n (<= 200)")->check(CLI::Range(1, 200));
  cyc_cmd->add_option("--from", cyc_from, "First n")->check(CLI::Range(1, 200));
  cyc_cmd->add_option("--to", cyc_to, "Last n")->check(CLI::Range(1, 200));
  cyc_cmd->add_option("--schwarz", schwarz_max, "Sweep |log|Phi_n(gamma^-1)|| for n up to this")
      ->check(CLI::PositiveNumber);

  // yu-check
  auto* yu_cmd = app.add_subcommand("yu-check", "Numeric inequalities behind the Yu-type estimate");
  std::optional<int> yu_k;
  int yu_from = 0, yu_to = 0;
  yu_cmd->add_option("--k", yu_k, "Single k >= 8")->check(CLI::Range(kMinK, 100000));
  yu_cmd->add_option("--from", yu_from, "First k")->check(CLI::Range(kMinK, 100000));
  yu_cmd->add_option("--to", yu_to, "Last k")->check(CLI::Range(kMinK, 100000));

  // bigkappa
  auto* big_cmd = app.add_subcommand("bigkappa", "Constant chain for log n < 143 log kappa log log kappa");
  std::string log_kappa_text = "250000";
  std::optional<std::string> big_kappa_text;
  BigKappaOptions big_options;
  big_cmd->add_option("--log-kappa", log_kappa_text, "log kappa (decimal, >= 250000)");
  big_cmd->add_option("--kappa", big_kappa_text, "kappa as an integer (overrides --log-kappa)");
  big_cmd->add_option("--theta-limit", big_options.numeric_theta_limit,
                      "Evaluate Theta_k from actual primes up to this k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the exit status of rejected inputs.
    return app.exit(e) == 0 ? 0 : 1;
  }

#ifdef _OPENMP
  if (config.parallelism > 0) omp_set_num_threads(config.parallelism);
#endif
  const int threads = config.parallelism;
  const Precision prec = config.precision();
  const Format format = config.output();

  try {
    if (*n0_cmd) {
      const mpz_class kappa = parse_integer(kappa_text);
      if (kappa > 1000000) {
        std::cerr << "note: kappa > 10^6 is accepted but lies outside the tabulated range; for very large kappa "
                     "see also `bigkappa`\n";
      }
      BoundResult result;
      if (fixed_k) {
        const SplitPrimeTable table = enumerate_split_primes_count(static_cast<std::size_t>(*fixed_k - 1));
        result = evaluate_at_k(kappa, *fixed_k, table, prec);
      } else {
        OptimizeOptions options;
        options.precision = prec;
        options.threads = threads;
        if (k_from || k_to) {
          const KRange def = default_k_range();
          options.k_range = KRange{k_from.value_or(def.from), k_to.value_or(def.to)};
        }
        result = n0_optimize(kappa, options);
      }
      std::cout << emit(result, format);
      return 0;
    }

    if (*tables_cmd) {
      static const char* const kTable1[] = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"};
      static const char* const kTable2[] = {"20", "30", "40", "50", "100", "1000", "10000", "100000", "1000000"};
      TablesReport report;
      report.which = which;
      OptimizeOptions options;
      options.precision = prec;
      options.threads = threads;
      const KRange range = default_k_range();
      const SplitPrimeTable table = enumerate_split_primes_count(static_cast<std::size_t>(range.to - 1));
      auto run = [&](const char* kappa) { report.rows.push_back(n0_optimize(mpz_class(kappa), options, table)); };
      if (which == 1) {
        for (const char* kappa : kTable1) run(kappa);
      } else {
        for (const char* kappa : kTable2) run(kappa);
      }
      std::cout << emit(report, format);
      return 0;
    }

    if (*qk_cmd) {
      SieveConfig sieve;
      sieve.threads = threads;
      if (!qk_full) {
        const QkReport report = verify_qk_bound(qk_query, sieve);
        return finish(emit(report, format), report.pass);
      }
      qk_query.k_to = kFullQkRange;
      const auto dir = config.cache();
      std::optional<fs::path> checkpoint_path;
      std::optional<Checkpoint> resume;
      if (dir) {
        fs::create_directories(*dir);
        checkpoint_path = *dir / ("verify-qk-" + std::to_string(qk_query.k_from) + "-" +
                                  std::to_string(qk_query.k_to) + "-" + qk_query.exponent + ".ckpt");
        resume = load_checkpoint(*checkpoint_path);
        if (resume) std::cerr << "resuming at k = " << resume->progress.next_k << "\n";
      }
      const std::int64_t prior_checked = resume ? resume->checked : 0;
      std::int64_t next_report = 0;
      QkReport report = verify_qk_bound(
          qk_query, sieve, resume ? std::optional(resume->progress) : std::nullopt, [&](const QkProgress& progress) {
            if (!checkpoint_path || progress.next_k < next_report) return;
            next_report = progress.next_k + 1000000;
            const std::int64_t done = std::max<std::int64_t>(0, std::min(progress.next_k - 1, qk_query.k_to) -
                                                                    qk_query.k_from + 1);
            store_checkpoint(*checkpoint_path, Checkpoint{progress, done, 0});
            std::cerr << "checkpoint: k = " << progress.next_k << "\n";
          });
      if (report.pass) report.checked += prior_checked;
      if (report.pass && report.last_q == 0 && resume) report.last_q = resume->last_q;
      return finish(emit(report, format), report.pass);
    }

    if (*prim_cmd) {
      prim_options.precision = prec;
      const std::uint64_t lo = n_single ? *n_single : n_from;
      const std::uint64_t hi = n_single ? *n_single : (n_to ? n_to : n_from);
      if (lo == 0 || hi < lo) throw CLI::ValidationError("primitive", "give --n or --from/--to");
      PrimitiveReport report;
      bool pass = true;
      for (std::uint64_t n = lo; n <= hi; ++n) {
        PrimitiveRow row;
        row.set = primitive_divisors(n, prim_options);
        row.eliou = eliou_check(n, row.set, prec);
        pass = pass && (row.eliou.pass || !row.eliou.in_regime);
        report.rows.push_back(std::move(row));
      }
      return finish(emit(report, format), pass);
    }

    if (*cyc_cmd) {
      CyclotomicReport report;
      bool pass = true;
      const std::uint64_t lo = cyc_single ? *cyc_single : cyc_from;
      const std::uint64_t hi = cyc_single ? *cyc_single : (cyc_to ? cyc_to : cyc_from);
      if (lo > 0) {
        if (hi < lo) throw CLI::ValidationError("cyclotomic", "--to must be >= --from");
        for (std::uint64_t n = lo; n <= hi; ++n) {
          CyclotomicRow row{phi_eval_exact(n), esum_identity_check(n, prec), schinzel_check(n)};
          pass = pass && row.esum.delta_ok && row.schinzel.pass;
          report.rows.push_back(std::move(row));
        }
      }
      if (schwarz_max) {
        report.schwarz = schwarz_bound_check(*schwarz_max, prec, threads);
        pass = pass && report.schwarz->pass;
      }
      if (lo == 0 && !schwarz_max) throw CLI::ValidationError("cyclotomic", "give --n, --from/--to or --schwarz");
      return finish(emit(report, format), pass);
    }

    if (*yu_cmd) {
      const int lo = yu_k ? *yu_k : yu_from;
      const int hi = yu_k ? *yu_k : (yu_to ? yu_to : yu_from);
      if (lo == 0 || hi < lo) throw CLI::ValidationError("yu-check", "give --k or --from/--to");
      YuReport report;
      bool pass = true;
      for (int k = lo; k <= hi; ++k) {
        report.rows.push_back(yu_constants_check(k, prec));
        pass = pass && report.rows.back().pass;
      }
      return finish(emit(report, format), pass);
    }

    if (*big_cmd) {
      big_options.precision = prec;
      big_options.sieve.threads = threads;
      const BigKappaReport report = big_kappa_text
                                        ? bigkappa_bound(parse_integer(*big_kappa_text), big_options)
                                        : bigkappa_bound(Interval::from_decimal(log_kappa_text, prec), big_options);
      return finish(emit(report, format), report.pass);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::IncompleteFactorization:
        return kExitIncomplete;
      case ErrorKind::InternalInconsistency:
        return kExitInternal;
      default:
        return kExitHypothesis;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  }
  return 0;
}
