#pragma once

// Element-order engine: the largest even order in GL(N, 2), an explicit
// even-order element of Alt(points) built from odd primes, the analytic
// lower bound exp(sqrt(points ln(points) / 4)), and the dimension bound that
// compares the two.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "embound/cycle_structure.hpp"
#include "embound/dimension_bound.hpp"
#include "embound/exactmath.hpp"

namespace embound {

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;  // ascending, every prime in [2, limit]

  bool contains(std::uint64_t p) const;
};

/// Sieve of Eratosthenes over odd numbers; limit in [2, 2^32].
PrimeTable sieve(std::uint64_t limit);

/// 2^(N-1) - 2, the largest even element order in GL(N, 2) for N >= 4.
/// Exact form limited to N <= 4096.
Natural darafsheh_max_even_order(unsigned N);

/// Enclosure of log2(2^(N-1) - 2) for any N >= 4.
Log2Interval darafsheh_max_even_order_log2(const Natural& N, unsigned precision);

/// Two transpositions plus one p-cycle for each odd prime p <= z, all other
/// points fixed; z is the largest prime with 4 + sum_{3<=p<=z} p <= points.
struct ElementOrderWitness {
  CycleStructure structure;
  Natural order;  // 2 * prod_{3<=p<=z} p
  Log2Interval log2_order;
  std::optional<std::uint64_t> z;
};

/// Requires 7 <= points <= 2^40.
ElementOrderWitness construct_even_order_element(std::uint64_t points);

/// Enclosure of log2(exp(sqrt(points ln(points) / 4))) =
/// sqrt(points ln(points)) / 2 * log2(e). Requires points >= 8.
Log2Interval dixon_mortimer_lower_log2(const Natural& points, unsigned precision);

/// log2(e) * sqrt(2 ln 2): the factor with exp(t) = 2^(2^66 eps) at 2^128 points.
Log2Interval epsilon_enclosure(unsigned precision);

struct SideCondition {
  std::string name;
  std::string statement;
  bool passed = false;
  Log2Interval lhs;  // at the first (or failing) evaluation point
  Log2Interval rhs;
  std::uint64_t points_checked = 1;
};

/// (i)   f(4) ln 4 + f(3) ln 3 < f(19) ln 3, with f(z) = z / ln z
/// (ii)  f(19) theta*(19) < 100, theta*(z) = sum_{3<=p<=z} ln p
/// (iii) theta*(z) > z / 2 at every prime 19 <= z <= z_max
std::vector<SideCondition> verify_theorem43_side_conditions(unsigned precision = kDefaultPrecision,
                                                            std::uint64_t z_max = 10000);

enum class OrderMethod { kAnalytic, kConstructive };

std::string_view to_string(OrderMethod method);

/// Smallest m such that the even-order lower bound for Alt(F_2^n) does not
/// exceed the GL(2^m, 2) ceiling 2^(2^m - 1) - 2. ANALYTIC needs n >= 7,
/// CONSTRUCTIVE needs 3 <= n <= 40. For 2^m < 4 the GL(4, 2) ceiling is
/// used, since GL(N, 2) embeds in GL(4, 2).
DimensionBound order_dimension_lower_bound(unsigned n, OrderMethod method, unsigned precision = kDefaultPrecision);

namespace detail {
/// Dixon-Mortimer exponent with radicand coefficient 2^coefficient_log2
/// (the theorem uses 2^-2). Exposed for mutation testing.
Log2Interval dixon_mortimer_with_coefficient(const Natural& points, unsigned precision, int coefficient_log2);
/// Product of the given factors by binary splitting.
Natural product(const std::vector<std::uint64_t>& factors, std::size_t begin, std::size_t end);
}  // namespace detail

}  // namespace embound
