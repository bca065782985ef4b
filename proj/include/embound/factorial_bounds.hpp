#pragma once

// Counting engine: certified bounds on log2 |Sym(F_2^n)| = log2((2^n)!) and
// on log2 |GL(N, 2)|, and the smallest m for which |G| <= |GL(F_2^(2^m))| is
// not excluded.

#include <cstdint>
#include <string_view>
#include <vector>

#include "embound/dimension_bound.hpp"
#include "embound/exactmath.hpp"

namespace embound {

enum class GroupKind { kAlt, kSym };

std::string_view to_string(GroupKind kind);
/// Accepts "alt" / "sym"; throws LookupError otherwise.
GroupKind parse_group_kind(std::string_view name);

enum class FactorialEngineKind { kElementary, kStirling, kExact };

std::string_view to_string(FactorialEngineKind kind);

struct FactorialBoundEngine {
  FactorialEngineKind kind = FactorialEngineKind::kElementary;
  unsigned precision = kDefaultPrecision;
};

/// L(n) = n + sum_{i=1}^{n-1} 2^(n-i) (n-i) = n + (n-2) 2^n + 2, with
/// log2((2^n)!) > L(n). Each factor 2^(n-i+1) - h, 1 <= h <= 2^(n-i), is
/// bounded below by 2^(n-i).
Natural elementary_lower_log2_factorial_pow2(unsigned n);

/// n 2^n: each of the 2^n factors is at most 2^n.
Natural elementary_upper_log2_factorial_pow2(unsigned n);

/// Integer exponents with 2^(n^lower) < (2^n)! < 2^(n^upper): lower is the
/// largest k with n^k < L(n), upper the smallest k with n 2^n <= n^k.
/// For n = 128 these are 19 and 20; for n = 64, 11 and 12.
struct LemmaExponents {
  unsigned lower = 0;
  unsigned upper = 0;
};
LemmaExponents lemma_factorial_exponents(unsigned n);

struct InductionStep {
  unsigned n = 0;
  bool passed = false;
};

/// Exact check of n^20 + 2^n n + 2^n < (n+1)^20 for every 2 <= n <= n_max,
/// the step that carries (2^n)! < 2^(n^20) from n to n+1.
struct InductionRecord {
  bool base_case_passed = false;  // (2^2)! < 2^(2^20)
  std::vector<InductionStep> steps;

  bool all_passed() const;
  std::size_t passed_count() const;
};

/// Requires 2 <= n_max <= 128 (DomainError otherwise).
InductionRecord verify_induction_chain(unsigned n_max);

/// Enclosure of the real number N log2 N - N log2 e, the lower half of the
/// Stirling-type bound.
Log2Interval stirling_lower_value(const Natural& N, unsigned precision);

/// Encloses [N log2 N - N log2 e, N log2 N - N log2 e + log2 N], which
/// contains log2(N!). The upper half fails for N <= 6; there the upper
/// endpoint is raised to the certified upper endpoint of log2(N!).
Log2Interval stirling_log2_factorial_bounds(const Natural& N, unsigned precision);

/// Certified enclosure of log2 |G| for G = Alt/Sym(F_2^n).
Log2Interval group_log2_order(unsigned n, GroupKind kind, const FactorialBoundEngine& engine);

/// Enclosure of the engine's lower bound on log2 |G| (a point for
/// ELEMENTARY). Exclusion decisions look only at this quantity.
Log2Interval group_log2_lower_bound(unsigned n, GroupKind kind, const FactorialBoundEngine& engine);

/// prod_{h=0}^{N-1} (2^N - 2^h), 1 <= N <= 512.
Natural gl_order_exact(unsigned N);

/// [N^2 - 2, N^2]; the lower end holds since prod_{k>=1}(1 - 2^-k) > 1/4.
Log2Interval gl_log2_order_bounds(const Natural& N);

/// Smallest m with log2 |G| > log2 |GL(F_2^(2^m))| not certified; every
/// smaller m is backed by an evidence entry. Requires n >= 4.
DimensionBound counting_dimension_lower_bound(unsigned n, GroupKind kind, const FactorialBoundEngine& engine);

/// Same exclusion for an arbitrary dimension N (not only powers of two):
/// the smallest N whose bound N^2 is not strictly below the group bound.
Natural counting_min_raw_dimension(unsigned n, GroupKind kind, const FactorialBoundEngine& engine);

}  // namespace embound
