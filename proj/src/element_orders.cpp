#include "embound/element_orders.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace embound {

bool PrimeTable::contains(std::uint64_t p) const { return std::binary_search(primes.begin(), primes.end(), p); }

PrimeTable sieve(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve requires limit >= 2");
  if (limit > (std::uint64_t{1} << 32)) throw CapabilityError("sieve capped at 2^32");
  PrimeTable table;
  table.limit = limit;
  table.primes.push_back(2);
  // composite[i] refers to the odd number 2i + 1.
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    table.primes.push_back(p);
    if (p > limit / p) continue;
    for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
  }
  return table;
}

Natural darafsheh_max_even_order(unsigned N) {
  if (N < 4) throw DomainError("maximum even order bound requires N >= 4, got " + std::to_string(N));
  if (N > 4096) throw CapabilityError("exact maximum even order limited to N <= 4096; use the log2 form");
  return Natural::pow2(N - 1) - Natural(2);
}

Log2Interval darafsheh_max_even_order_log2(const Natural& N, unsigned precision) {
  if (N < Natural(4)) throw DomainError("maximum even order bound requires N >= 4");
  if (N <= Natural(std::max<std::uint64_t>(4096, precision + 8))) {
    return log2_of_natural(darafsheh_max_even_order(static_cast<unsigned>(N.to_u64())), precision);
  }
  // log2(2^(N-1) - 2) = (N-1) + log2(1 - x), x = 2^(2-N) <= 2^-(p+6), and
  // 0 < -log2(1 - x) <= 2x log2(e) < 2^-p.
  const DyadicRational top(N - Natural(1));
  return {top - DyadicRational::pow2(-static_cast<std::int64_t>(precision)), top};
}

namespace detail {

Natural product(const std::vector<std::uint64_t>& factors, std::size_t begin, std::size_t end) {
  if (end <= begin) return Natural(1);
  if (end - begin <= 16) {
    Natural acc(1);
    for (std::size_t i = begin; i < end; ++i) acc *= Natural(factors[i]);
    return acc;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return product(factors, begin, mid) * product(factors, mid, end);
}

Log2Interval dixon_mortimer_with_coefficient(const Natural& points, unsigned precision, int coefficient_log2) {
  if (points < Natural(8)) throw DomainError("analytic order bound requires points >= 8");
  const auto q = static_cast<unsigned>(precision + points.bit_length() / 2 + 16);
  const Log2Interval ln_points = round_outward(log2_of_natural(points, q) * const_ln2(q), q);
  const Log2Interval radicand = (ln_points * points).shifted(coefficient_log2);
  const Log2Interval exponent = sqrt(radicand, q);
  return round_outward(exponent * const_log2_e(q), precision + 2);
}

}  // namespace detail

ElementOrderWitness construct_even_order_element(std::uint64_t points) {
  if (points < 7) throw DomainError("construct_even_order_element requires points >= 7 (room for [2,2,3])");
  if (points > (std::uint64_t{1} << 40)) throw CapabilityError("construct_even_order_element capped at 2^40 points");

  // Prime sum up to z is about z^2 / (2 ln z).
  const double approx = std::sqrt(2.0 * static_cast<double>(points) * std::log(static_cast<double>(points)));
  auto limit = static_cast<std::uint64_t>(approx * 1.1) + 64;
  for (;;) {
    const PrimeTable table = sieve(limit);
    std::uint64_t sum = 4;
    std::size_t last = 0;  // index of z in table.primes
    bool exhausted = true;
    for (std::size_t i = 1; i < table.primes.size(); ++i) {
      if (sum + table.primes[i] > points) {
        exhausted = false;
        break;
      }
      sum += table.primes[i];
      last = i;
    }
    if (exhausted) {
      limit *= 2;
      continue;
    }
    std::vector<std::uint64_t> cycles{2, 2};
    cycles.insert(cycles.end(), table.primes.begin() + 1, table.primes.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    ElementOrderWitness w;
    w.order = Natural(2) * detail::product(table.primes, 1, last + 1);
    w.log2_order = log2_of_natural(w.order, kDefaultPrecision);
    w.z = table.primes[last];
    w.structure = CycleStructure(std::move(cycles), points);
    return w;
  }
}

Log2Interval dixon_mortimer_lower_log2(const Natural& points, unsigned precision) {
  return detail::dixon_mortimer_with_coefficient(points, precision, -2);
}

Log2Interval epsilon_enclosure(unsigned precision) {
  const unsigned q = precision + 8;
  const Log2Interval root = sqrt(const_ln2(q).shifted(1), q);
  return round_outward(root * const_log2_e(q), precision + 2);
}

namespace {

Log2Interval integer(std::uint64_t v) { return Log2Interval::point(DyadicRational(Natural(v))); }

// f(z) = z / ln z
Log2Interval f_of(std::uint64_t z, unsigned p) { return divide(integer(z), ln_of_natural(Natural(z), p), p); }

SideCondition decide_less(std::string name, std::string statement, unsigned precision,
                          const std::function<std::pair<Log2Interval, Log2Interval>(unsigned)>& sides) {
  SideCondition c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  auto [result, used] = refine(
      [&](unsigned p) -> std::optional<std::pair<Log2Interval, Log2Interval>> {
        auto s = sides(p);
        if (compare(s.first, s.second) == Ordering::kInconclusive) return std::nullopt;
        return s;
      },
      precision, c.name);
  (void)used;
  c.lhs = result.first;
  c.rhs = result.second;
  c.passed = compare(c.lhs, c.rhs) == Ordering::kLess;
  return c;
}

}  // namespace

std::vector<SideCondition> verify_theorem43_side_conditions(unsigned precision, std::uint64_t z_max) {
  std::vector<SideCondition> out;

  out.push_back(decide_less("thm43.i", "f(4) ln 4 + f(3) ln 3 < f(19) ln 3", precision, [](unsigned p) {
    const Log2Interval ln3 = ln_of_natural(Natural(3), p);
    const Log2Interval ln4 = ln_of_natural(Natural(4), p);
    return std::pair{f_of(4, p) * ln4 + f_of(3, p) * ln3, f_of(19, p) * ln3};
  }));

  out.push_back(decide_less("thm43.ii", "f(19) theta*(19) < 100", precision, [](unsigned p) {
    const Log2Interval theta = ln_of_natural(Natural(3 * 5 * 7 * 11 * 13 * 17 * 19), p);
    return std::pair{f_of(19, p) * theta, integer(100)};
  }));

  SideCondition third;
  third.name = "thm43.iii";
  third.statement = "theta*(z) > z/2 for primes 19 <= z <= " + std::to_string(z_max);
  third.passed = true;
  third.points_checked = 0;
  const PrimeTable table = sieve(std::max<std::uint64_t>(z_max, 19));
  Natural primorial(1);
  for (std::size_t i = 1; i < table.primes.size(); ++i) {
    const std::uint64_t z = table.primes[i];
    primorial *= Natural(z);
    if (z < 19) continue;
    const Log2Interval half = Log2Interval::point(DyadicRational(Natural(z)).shifted(-1));
    auto [theta, used] = refine(
        [&](unsigned p) -> std::optional<Log2Interval> {
          Log2Interval t = ln_of_natural(primorial, p);
          if (compare(t, half) == Ordering::kInconclusive) return std::nullopt;
          return t;
        },
        precision, "theta*(z) > z/2 at z=" + std::to_string(z));
    (void)used;
    const bool ok = compare(theta, half) == Ordering::kGreater;
    if (third.points_checked == 0 || !ok) {
      third.lhs = theta;
      third.rhs = half;
    }
    ++third.points_checked;
    if (!ok) {
      third.passed = false;
      break;
    }
  }
  out.push_back(std::move(third));
  return out;
}

std::string_view to_string(OrderMethod method) {
  return method == OrderMethod::kAnalytic ? "order-analytic" : "order-constructive";
}

DimensionBound order_dimension_lower_bound(unsigned n, OrderMethod method, unsigned precision) {
  std::function<Log2Interval(unsigned)> lhs;
  if (method == OrderMethod::kAnalytic) {
    if (n < 7) throw DomainError("analytic order bound requires n >= 7, got " + std::to_string(n));
    const Natural points = Natural::pow2(n);
    lhs = [points](unsigned p) { return dixon_mortimer_lower_log2(points, p); };
  } else {
    if (n < 3) throw DomainError("constructive order bound requires n >= 3, got " + std::to_string(n));
    if (n > 40) throw CapabilityError("constructive order bound limited to n <= 40, got " + std::to_string(n));
    const Natural order = construct_even_order_element(std::uint64_t{1} << n).order;
    lhs = [order](unsigned p) { return log2_of_natural(order, p); };
  }
  const auto rhs = [](std::uint64_t m, unsigned p) {
    const Natural dim = m < 2 ? Natural(4) : Natural::pow2(m);
    return darafsheh_max_even_order_log2(dim, p);
  };
  return scan_dimension_exponent(lhs, rhs, precision,
                                 std::string(to_string(method)) + " bound, n=" + std::to_string(n));
}

}  // namespace embound
