#pragma once

// Verification suites: exact checks of the counting lemma, the side
// conditions of the analytic bound, and oracle-vs-engine cross-checks.
// Every engine formula the checks exercise goes through `Formulas`, so a
// perturbed formula can be substituted to confirm the suite notices.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "embound/exactmath.hpp"
#include "embound/oracles.hpp"

namespace embound {

struct Formulas {
  std::function<Natural(unsigned)> darafsheh_max_even_order;                     // 2^(N-1) - 2
  std::function<Natural(unsigned)> elementary_lower;                             // n + (n-2) 2^n + 2
  std::function<Natural(unsigned)> elementary_upper;                             // n 2^n
  std::function<Log2Interval(const Natural&, unsigned)> stirling_bounds;         // N log2(N/e) + [0, log2 N]
  std::function<Log2Interval(const Natural&)> gl_log2_window;                    // [N^2 - 2, N^2]
  std::function<Natural(unsigned)> gl_order;                                     // prod (2^N - 2^h)
  std::function<Log2Interval(const Natural&, unsigned)> dixon_mortimer_lower;    // log2 e^sqrt(x ln x / 4)
  std::function<Natural(std::uint64_t)> witness_order;                           // 2 prod p

  /// The formulas the engines use.
  static Formulas reference();
  /// Reference with one formula perturbed; throws LookupError for unknown names.
  static Formulas mutated(std::string_view mutation);
};

enum class Suite { kAll, kLemma31, kThm43, kOracles };

std::string_view to_string(Suite suite);
/// Accepts "all", "lemma31", "thm43", "oracles"; throws LookupError otherwise.
Suite parse_suite(std::string_view name);

/// Names accepted by Formulas::mutated, in a fixed order.
const std::vector<std::string>& mutation_names();

/// Brute-force tables the cross-checks compare against. Computing them is the
/// expensive part of a run (GL(5, 2) enumeration), so they are built once and
/// shared between runs.
struct OracleTables {
  std::vector<GlEnumerationSummary> gl;          // index N - 1, N = 1..5
  std::vector<Log2Interval> log2_factorial_pow2;  // index n - 2, n = 2..16, 256 fractional bits
  std::vector<Natural> landau_even_order;         // index points - 7, both constraints
  std::vector<Natural> landau_even_parity;        // index points - 7, parity only

  /// Builds only the tables the given suite reads.
  static OracleTables compute(Suite suite);
};

struct SuiteOptions {
  unsigned induction_n_max = 128;
  unsigned precision = kDefaultPrecision;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  Suite suite = Suite::kAll;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failed_count() const;
};

/// Runs the named checks. Failures are recorded in the report, never thrown;
/// a check whose inputs are out of range fails with the error as detail.
SuiteReport run_verification_suite(Suite suite, const Formulas& formulas, const OracleTables& tables,
                                   const SuiteOptions& options = {});
SuiteReport run_verification_suite(Suite suite, const Formulas& formulas = Formulas::reference(),
                                   const SuiteOptions& options = {});

}  // namespace embound
