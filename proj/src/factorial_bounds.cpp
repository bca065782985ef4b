#include "embound/factorial_bounds.hpp"

#include <algorithm>
#include <string>

namespace embound {

namespace {

void require_bit_width(unsigned n, unsigned min, std::string_view op) {
  if (n < min) {
    throw DomainError(std::string(op) + ": requires n >= " + std::to_string(min) + ", got " + std::to_string(n));
  }
}

unsigned exact_engine_cap_bits() { return 20; }

Natural alt_divisor(GroupKind kind) { return kind == GroupKind::kAlt ? Natural(2) : Natural(1); }

DyadicRational alt_offset(GroupKind kind) { return kind == GroupKind::kAlt ? DyadicRational(1) : DyadicRational(0); }

Log2Interval exact_group_log2(unsigned n, GroupKind kind, unsigned precision) {
  if (n > exact_engine_cap_bits()) {
    throw CapabilityError("EXACT engine needs 2^n <= 2^20, got n=" + std::to_string(n));
  }
  const Natural order = Natural::factorial(std::uint64_t{1} << n) / alt_divisor(kind);
  return log2_of_natural(order, precision);
}

}  // namespace

std::string_view to_string(GroupKind kind) { return kind == GroupKind::kAlt ? "alt" : "sym"; }

GroupKind parse_group_kind(std::string_view name) {
  if (name == "alt") return GroupKind::kAlt;
  if (name == "sym") return GroupKind::kSym;
  throw LookupError("unknown group kind '" + std::string(name) + "' (valid: alt, sym)");
}

std::string_view to_string(FactorialEngineKind kind) {
  switch (kind) {
    case FactorialEngineKind::kElementary: return "elementary";
    case FactorialEngineKind::kStirling: return "stirling";
    case FactorialEngineKind::kExact: return "exact";
  }
  return "?";
}

Natural elementary_lower_log2_factorial_pow2(unsigned n) {
  require_bit_width(n, 2, "elementary_lower_log2_factorial_pow2");
  return Natural(n) + Natural(n - 2) * Natural::pow2(n) + Natural(2);
}

Natural elementary_upper_log2_factorial_pow2(unsigned n) {
  require_bit_width(n, 2, "elementary_upper_log2_factorial_pow2");
  return Natural(n) * Natural::pow2(n);
}

LemmaExponents lemma_factorial_exponents(unsigned n) {
  require_bit_width(n, 2, "lemma_factorial_exponents");
  const Natural lower = elementary_lower_log2_factorial_pow2(n);
  const Natural upper = elementary_upper_log2_factorial_pow2(n);
  const Natural base(n);
  LemmaExponents out;
  Natural power(1);
  unsigned k = 0;
  while (power * base < lower) {
    power *= base;
    ++k;
  }
  out.lower = k;
  while (power < upper) {
    power *= base;
    ++k;
  }
  out.upper = k;
  return out;
}

bool InductionRecord::all_passed() const {
  return base_case_passed && std::all_of(steps.begin(), steps.end(), [](const InductionStep& s) { return s.passed; });
}

std::size_t InductionRecord::passed_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const InductionStep& s) { return s.passed; }));
}

InductionRecord verify_induction_chain(unsigned n_max) {
  if (n_max < 2 || n_max > 128) {
    throw DomainError("verify_induction_chain: n_max must lie in [2, 128] (the proven range), got " +
                      std::to_string(n_max));
  }
  InductionRecord rec;
  // (2^2)! = 24 < 2^(2^20): 24 has 5 bits.
  rec.base_case_passed = Natural::factorial(4).bit_length() <= (std::uint64_t{1} << 20);
  for (unsigned n = 2; n <= n_max; ++n) {
    const Natural lhs = Natural(n).pow(20) + Natural::pow2(n) * Natural(n) + Natural::pow2(n);
    const Natural rhs = Natural(n + 1).pow(20);
    rec.steps.push_back({n, lhs < rhs});
  }
  return rec;
}

Log2Interval stirling_lower_value(const Natural& N, unsigned precision) {
  if (N < Natural(2)) throw DomainError("stirling bounds require N >= 2");
  const auto q = static_cast<unsigned>(precision + N.bit_length() + 8);
  const Log2Interval value = (log2_of_natural(N, q) - const_log2_e(q)) * N;
  return round_outward(value, precision + 4);
}

Log2Interval stirling_log2_factorial_bounds(const Natural& N, unsigned precision) {
  const Log2Interval lower = stirling_lower_value(N, precision);
  const Log2Interval log2n = log2_of_natural(N, precision + 4);
  DyadicRational hi = lower.hi() + log2n.hi();
  if (N < Natural(7)) {
    hi = std::max(hi, log2_of_natural(Natural::factorial(N.to_u64()), precision + 4).hi());
  }
  return {lower.lo(), hi};
}

Log2Interval group_log2_lower_bound(unsigned n, GroupKind kind, const FactorialBoundEngine& engine) {
  require_bit_width(n, 2, "group_log2_lower_bound");
  switch (engine.kind) {
    case FactorialEngineKind::kElementary: {
      const Natural bound = Natural(n).pow(lemma_factorial_exponents(n).lower);
      return Log2Interval::point(DyadicRational(bound) - alt_offset(kind));
    }
    case FactorialEngineKind::kStirling:
      return stirling_lower_value(Natural::pow2(n), engine.precision) - Log2Interval::point(alt_offset(kind));
    case FactorialEngineKind::kExact:
      return exact_group_log2(n, kind, engine.precision);
  }
  throw InternalError("unknown factorial engine");
}

Log2Interval group_log2_order(unsigned n, GroupKind kind, const FactorialBoundEngine& engine) {
  require_bit_width(n, 2, "group_log2_order");
  const Log2Interval offset = Log2Interval::point(alt_offset(kind));
  switch (engine.kind) {
    case FactorialEngineKind::kElementary: {
      const Natural lower = Natural(n).pow(lemma_factorial_exponents(n).lower);
      return Log2Interval(DyadicRational(lower), DyadicRational(elementary_upper_log2_factorial_pow2(n))) - offset;
    }
    case FactorialEngineKind::kStirling:
      return stirling_log2_factorial_bounds(Natural::pow2(n), engine.precision) - offset;
    case FactorialEngineKind::kExact:
      return exact_group_log2(n, kind, engine.precision);
  }
  throw InternalError("unknown factorial engine");
}

Natural gl_order_exact(unsigned N) {
  if (N < 1) throw DomainError("gl_order_exact requires N >= 1");
  if (N > 512) throw CapabilityError("gl_order_exact capped at N = 512; use gl_log2_order_bounds");
  const Natural full = Natural::pow2(N);
  Natural order(1);
  for (unsigned h = 0; h < N; ++h) order *= full - Natural::pow2(h);
  return order;
}

Log2Interval gl_log2_order_bounds(const Natural& N) {
  if (N.is_zero()) throw DomainError("gl_log2_order_bounds requires N >= 1");
  const DyadicRational sq(N * N);
  return {sq - DyadicRational(2), sq};
}

DimensionBound counting_dimension_lower_bound(unsigned n, GroupKind kind, const FactorialBoundEngine& engine) {
  require_bit_width(n, 4, "counting_dimension_lower_bound");
  const auto lhs = [&](unsigned p) { return group_log2_lower_bound(n, kind, {engine.kind, p}); };
  const auto rhs = [](std::uint64_t m, unsigned) {
    return Log2Interval::point(gl_log2_order_bounds(Natural::pow2(m)).hi());
  };
  return scan_dimension_exponent(lhs, rhs, engine.precision,
                                 "counting bound (" + std::string(to_string(engine.kind)) + ", n=" + std::to_string(n) + ")");
}

Natural counting_min_raw_dimension(unsigned n, GroupKind kind, const FactorialBoundEngine& engine) {
  require_bit_width(n, 2, "counting_min_raw_dimension");
  auto [result, precision] = refine(
      [&](unsigned p) -> std::optional<Natural> {
        const Log2Interval bound = group_log2_lower_bound(n, kind, {engine.kind, p});
        // Smallest N >= 1 with N^2 >= lo; every smaller N has N^2 < lo.
        mpz_class c = bound.lo().ceil();
        if (c < 1) c = 1;
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
        if (r * r < c) r += 1;
        const Natural candidate{mpz_class(r)};
        if (bound.hi() <= DyadicRational(candidate * candidate)) return candidate;
        return std::nullopt;
      },
      engine.precision, "raw counting dimension");
  (void)precision;
  return result;
}

}  // namespace embound
