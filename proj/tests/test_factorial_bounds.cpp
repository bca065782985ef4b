#include <cmath>

#include "doctest.h"
#include "embound/factorial_bounds.hpp"
#include "embound/oracles.hpp"
#include "support/mpfr_oracle.hpp"

using namespace embound;

namespace {

DyadicRational nat(const Natural& n) { return DyadicRational(n); }

// Literal telescoping exponent n + sum_{i=1}^{n-1} 2^(n-i) (n-i).
Natural literal_sum(unsigned n) {
  Natural s(n);
  for (unsigned i = 1; i < n; ++i) s += Natural::pow2(n - i) * Natural(n - i);
  return s;
}

// Smallest N whose exact |GL(N,2)| is at least |G|.
unsigned exact_raw_dimension(const Natural& group_order) {
  unsigned N = 1;
  while (gl_order_exact(N) < group_order) ++N;
  return N;
}

}  // namespace

TEST_SUITE("factorial_bounds") {

TEST_CASE("elementary lower exponent: closed form and small cases") {
  const Natural L128 = elementary_lower_log2_factorial_pow2(128);
  CHECK(L128 == Natural(128) + Natural(126) * Natural::pow2(128) + Natural(2));
  CHECK(Natural(128).pow(19) == Natural::pow2(133));
  CHECK(Natural(128).pow(19) < L128);

  CHECK(elementary_lower_log2_factorial_pow2(2) == Natural(4));
  CHECK(factorial_exact(4) > Natural::pow2(4));
  CHECK_THROWS_AS(elementary_lower_log2_factorial_pow2(1), DomainError);

  for (unsigned n = 2; n <= 64; ++n) CHECK(elementary_lower_log2_factorial_pow2(n) == literal_sum(n));
  for (unsigned n = 4; n <= 12; ++n) {
    CHECK(factorial_exact(std::uint64_t{1} << n) > Natural::pow2(elementary_lower_log2_factorial_pow2(n).to_u64()));
  }
}

TEST_CASE("elementary upper exponent") {
  CHECK(elementary_upper_log2_factorial_pow2(128) == Natural::pow2(135));
  CHECK(Natural::pow2(135) < Natural(128).pow(20));
  CHECK(elementary_upper_log2_factorial_pow2(2) == Natural(8));
  CHECK(Natural(24) < Natural::pow2(8));
  CHECK_THROWS_AS(elementary_upper_log2_factorial_pow2(0), DomainError);
  for (unsigned n = 4; n <= 12; ++n) {
    const Log2Interval exact = log2_of_natural(factorial_exact(std::uint64_t{1} << n), 64);
    CHECK(nat(elementary_lower_log2_factorial_pow2(n)) < exact.lo());
    CHECK(exact.hi() < nat(elementary_upper_log2_factorial_pow2(n)));
  }
}

TEST_CASE("integer lemma exponents") {
  CHECK(lemma_factorial_exponents(128).lower == 19);
  CHECK(lemma_factorial_exponents(128).upper == 20);
  CHECK(lemma_factorial_exponents(64).lower == 11);
  CHECK(lemma_factorial_exponents(64).upper == 12);
  for (unsigned n = 2; n <= 12; ++n) {
    const auto k = lemma_factorial_exponents(n);
    const Log2Interval exact = log2_of_natural(factorial_exact(std::uint64_t{1} << n), 64);
    CHECK(nat(Natural(n).pow(k.lower)) < exact.lo());
    CHECK(exact.hi() < nat(Natural(n).pow(k.upper)));
  }
}

TEST_CASE("induction chain for the upper exponent") {
  const auto rec = verify_induction_chain(128);
  CHECK(rec.base_case_passed);
  CHECK(rec.steps.size() == 127);
  CHECK(rec.passed_count() == 127);
  CHECK(rec.all_passed());
  CHECK(Natural(2).pow(20) + Natural(4) * Natural(2) + Natural(4) == Natural(1048588));
  CHECK(Natural(3).pow(20) == Natural::from_string("3486784401"));
  CHECK_THROWS_AS(verify_induction_chain(129), DomainError);
  CHECK_THROWS_AS(verify_induction_chain(1), DomainError);
}

TEST_CASE("Stirling enclosure examples") {
  const auto ten = stirling_log2_factorial_bounds(Natural(10), 64);
  CHECK(ten.lo().to_double() >= 18.78);
  CHECK(ten.hi().to_double() <= 22.12);
  CHECK(ten.strictly_contains(log2_of_natural(Natural(3628800), 64).lo()));
  CHECK(ten.strictly_contains(log2_of_natural(Natural(3628800), 64).hi()));

  const auto big = stirling_log2_factorial_bounds(Natural::pow2(128), kDefaultPrecision);
  CHECK(big.lo() > nat(Natural::pow2(134)));

  CHECK(stirling_log2_factorial_bounds(Natural(2), 64).contains(DyadicRational(1)));
  CHECK_THROWS_AS(stirling_log2_factorial_bounds(Natural(1), 64), DomainError);
}

TEST_CASE("Stirling enclosure contains log2(N!) for every small N") {
  for (std::uint64_t N = 2; N <= 400; ++N) {
    CAPTURE(N);
    const auto iv = stirling_log2_factorial_bounds(Natural(N), 64);
    CHECK(oracle::encloses(iv, [N](mpfr_ptr r) {
      oracle::set_natural(r, Natural::factorial(N));
      mpfr_log2(r, r, MPFR_RNDN);
    }));
  }
}

TEST_CASE("sandwich: exact log2((2^n)!) strictly inside elementary and Stirling enclosures") {
  for (unsigned n = 2; n <= 16; ++n) {
    CAPTURE(n);
    const Log2Interval exact = log2_of_natural(factorial_exact(std::uint64_t{1} << n), 256);
    const Log2Interval elem = group_log2_order(n, GroupKind::kSym, {FactorialEngineKind::kElementary, 64});
    const Log2Interval stir = group_log2_order(n, GroupKind::kSym, {FactorialEngineKind::kStirling, 64});
    CHECK(elem.lo() < exact.lo());
    CHECK(exact.hi() < elem.hi());
    CHECK(nat(elementary_lower_log2_factorial_pow2(n)) < exact.lo());
    CHECK(stir.lo() < exact.lo());
    CHECK(exact.hi() < stir.hi());
  }
}

TEST_CASE("group_log2_order engines") {
  const auto aes = group_log2_order(128, GroupKind::kAlt, {});
  CHECK(aes.lo() >= nat(Natural::pow2(133)) - DyadicRational(1));
  CHECK(aes.lo() > nat(Natural::pow2(132)));
  const auto kasumi = group_log2_order(64, GroupKind::kAlt, {});
  CHECK(kasumi.lo() >= nat(Natural::pow2(66)) - DyadicRational(1));

  const auto s4 = group_log2_order(2, GroupKind::kSym, {FactorialEngineKind::kExact, 64});
  CHECK(s4 == log2_of_natural(Natural(24), 64));
  const auto alt_vs_sym = group_log2_order(5, GroupKind::kSym, {FactorialEngineKind::kStirling, 64}) -
                          group_log2_order(5, GroupKind::kAlt, {FactorialEngineKind::kStirling, 64});
  CHECK(alt_vs_sym.contains(DyadicRational(1)));
  CHECK_THROWS_AS(group_log2_order(21, GroupKind::kAlt, {FactorialEngineKind::kExact, 64}), CapabilityError);
}

TEST_CASE("exact GL orders and the [N^2 - 2, N^2] window") {
  CHECK(gl_order_exact(1) == Natural(1));
  CHECK(gl_order_exact(2) == Natural(6));
  CHECK(gl_order_exact(4) == Natural(20160));
  CHECK(gl_order_exact(4) == factorial_exact(8) / Natural(2));
  CHECK_THROWS_AS(gl_order_exact(513), CapabilityError);
  CHECK_THROWS_AS(gl_order_exact(0), DomainError);
  for (unsigned N = 1; N <= 64; ++N) {
    const Natural order = gl_order_exact(N);
    CHECK(order < Natural::pow2(N * N));
    CHECK(Natural::pow2(N * N) < order * Natural(4));
    const auto window = gl_log2_order_bounds(Natural(N));
    const auto exact = log2_of_natural(order, 64);
    CHECK(window.lo() < exact.lo());
    CHECK(exact.hi() < window.hi());
  }
  CHECK(gl_log2_order_bounds(Natural(4)) == Log2Interval(DyadicRational(14), DyadicRational(16)));
  CHECK(gl_log2_order_bounds(Natural::pow2(66)).hi() == nat(Natural::pow2(132)));
  CHECK(gl_log2_order_bounds(Natural(1)).contains(DyadicRational(0)));
}

TEST_CASE("counting dimension bounds") {
  const FactorialBoundEngine elementary{FactorialEngineKind::kElementary, kDefaultPrecision};
  const FactorialBoundEngine stirling{FactorialEngineKind::kStirling, kDefaultPrecision};

  const auto aes = counting_dimension_lower_bound(128, GroupKind::kAlt, elementary);
  CHECK(aes.m_min == 67);
  REQUIRE(aes.evidence.size() == 67);
  for (std::uint64_t m = 0; m < 67; ++m) {
    CHECK(aes.evidence[m].ruled_out_m == m);
    CHECK(aes.evidence[m].holds());
  }
  CHECK(aes.evidence.back().lhs_log2_lo == nat(Natural::pow2(133)) - DyadicRational(1));
  CHECK(aes.evidence.back().rhs_log2_hi == nat(Natural::pow2(132)));

  CHECK(counting_dimension_lower_bound(128, GroupKind::kAlt, stirling).m_min == 68);
  CHECK(counting_dimension_lower_bound(64, GroupKind::kAlt, elementary).m_min == 33);
  CHECK_THROWS_AS(counting_dimension_lower_bound(3, GroupKind::kAlt, elementary), DomainError);
}

TEST_CASE("counting engines are consistent") {
  for (unsigned n : {8u, 16u, 32u, 64u, 128u}) {
    CAPTURE(n);
    for (auto kind : {GroupKind::kAlt, GroupKind::kSym}) {
      const auto e = counting_dimension_lower_bound(n, kind, {FactorialEngineKind::kElementary, 128}).m_min;
      const auto s = counting_dimension_lower_bound(n, kind, {FactorialEngineKind::kStirling, 128}).m_min;
      CHECK(s >= e);
    }
    for (auto engine : {FactorialEngineKind::kElementary, FactorialEngineKind::kStirling}) {
      const auto alt = counting_dimension_lower_bound(n, GroupKind::kAlt, {engine, 128}).m_min;
      const auto sym = counting_dimension_lower_bound(n, GroupKind::kSym, {engine, 128}).m_min;
      CHECK(sym >= alt);
      CHECK(sym - alt <= 1);
    }
  }
  // The exact engine is the tightest where it applies.
  for (unsigned n = 4; n <= 14; ++n) {
    const auto exact = counting_dimension_lower_bound(n, GroupKind::kAlt, {FactorialEngineKind::kExact, 128}).m_min;
    CHECK(counting_dimension_lower_bound(n, GroupKind::kAlt, {FactorialEngineKind::kStirling, 128}).m_min <= exact);
    CHECK(counting_dimension_lower_bound(n, GroupKind::kAlt, {FactorialEngineKind::kElementary, 128}).m_min <= exact);
  }
}

TEST_CASE("raw-dimension variant against exact GL orders") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (auto kind : {GroupKind::kAlt, GroupKind::kSym}) {
      CAPTURE(n);
      const Natural group = factorial_exact(std::uint64_t{1} << n) / Natural(kind == GroupKind::kAlt ? 2 : 1);
      const Natural raw = counting_min_raw_dimension(n, kind, {FactorialEngineKind::kExact, 64});
      CHECK(raw <= Natural(exact_raw_dimension(group)));
      // Every N below the raw bound is excluded by |GL(N,2)| < 2^(N^2) < |G|.
      const auto below = raw.to_u64() - 1;
      if (below >= 1) CHECK(gl_order_exact(static_cast<unsigned>(below)) < group);
    }
  }
  // 2^(133) - 1 > N^2 exactly when N <= 2^66.5.
  const Natural raw128 = counting_min_raw_dimension(128, GroupKind::kAlt, {});
  CHECK(raw128 * raw128 >= Natural::pow2(133) - Natural(1));
  CHECK((raw128 - Natural(1)) * (raw128 - Natural(1)) < Natural::pow2(133) - Natural(1));
}

}  // TEST_SUITE
