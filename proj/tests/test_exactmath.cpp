#include <random>
#include <vector>

#include <gmpxx.h>

#include "doctest.h"
#include "embound/exactmath.hpp"
#include "support/mpfr_oracle.hpp"

using namespace embound;

namespace {

DyadicRational dy(long m, std::int64_t e = 0) { return {mpz_class(m), e}; }
Log2Interval pt(long v) { return Log2Interval::point(DyadicRational(v)); }

mpq_class to_mpq(const DyadicRational& d) {
  mpq_class q(d.mantissa());
  if (d.exponent() >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(d.exponent()));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-d.exponent()));
  }
  return q;
}

bool contains_q(const Log2Interval& iv, const mpq_class& x) { return to_mpq(iv.lo()) <= x && x <= to_mpq(iv.hi()); }

DyadicRational random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> mant(-1'000'000'000L, 1'000'000'000L);
  std::uniform_int_distribution<int> exp(-40, 20);
  return {mpz_class(mant(rng)), exp(rng)};
}

Log2Interval random_interval(std::mt19937_64& rng) {
  auto a = random_dyadic(rng);
  auto b = random_dyadic(rng);
  return a <= b ? Log2Interval(a, b) : Log2Interval(b, a);
}

}  // namespace

TEST_SUITE("exactmath") {

TEST_CASE("Natural arithmetic and error paths") {
  CHECK(Natural(7) - Natural(3) == Natural(4));
  CHECK_THROWS_AS(Natural(3) - Natural(7), DomainError);
  CHECK_THROWS_AS(Natural::from_string("12a"), DomainError);
  CHECK(Natural::from_string("340282366920938463463374607431768211456") == Natural::pow2(128));
  CHECK(Natural::pow2(10).bit_length() == 11);
  CHECK(Natural(0).bit_length() == 0);
  CHECK(Natural(3).pow(4) == Natural(81));
  CHECK(Natural::factorial(0) == Natural(1));
  CHECK(Natural::factorial(10) == Natural(3628800));
  CHECK_THROWS_AS(Natural::factorial(kMaxExactFactorial + 1), CapabilityError);
  CHECK(lcm(Natural(4), Natural(6)) == Natural(12));
  CHECK_THROWS_AS(Natural(1) / Natural(0), DomainError);
  CHECK_THROWS_AS(Natural::pow2(64).to_u64(), CapabilityError);
}

TEST_CASE("DyadicRational canonical form and exact text round trip") {
  const DyadicRational a(mpz_class(12), -4);  // 12/16 = 3/4
  CHECK(a.mantissa() == 3);
  CHECK(a.exponent() == -2);
  CHECK(DyadicRational(mpz_class(0), 17).exponent() == 0);
  CHECK(a.to_string() == "3/2^2");
  CHECK(DyadicRational(-5).to_string() == "-5");

  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 500; ++i) {
    const auto d = random_dyadic(rng);
    CHECK(DyadicRational::parse(d.to_string()) == d);
    CHECK(to_mpq(d) == to_mpq(DyadicRational::parse(d.to_string())));
  }
  const DyadicRational huge(mpz_class(3), 5000);
  CHECK(DyadicRational::parse(huge.to_string()) == huge);
  CHECK_THROWS_AS(DyadicRational::parse("1/2^x"), DomainError);
}

TEST_CASE("log2_of_natural examples") {
  CHECK(log2_of_natural(Natural(8), 32) == pt(3));
  CHECK(log2_of_natural(Natural(1), 16) == pt(0));
  CHECK(log2_of_natural(Natural::pow2(133), 8) == pt(133));
  CHECK_THROWS_AS(log2_of_natural(Natural(0), 8), DomainError);

  const Log2Interval six = log2_of_natural(Natural(6), 64);
  CHECK(six.width() <= DyadicRational::pow2(-63));
  // log2 6 = 2.58496250072115618145373894394781650875981440769248106... (mpmath, 60 digits)
  CHECK(oracle::encloses(six, [](mpfr_ptr r) {
    mpfr_set_ui(r, 6, MPFR_RNDN);
    mpfr_log2(r, r, MPFR_RNDN);
  }));
  CHECK(six.lo().to_double() == doctest::Approx(2.584962500721156).epsilon(1e-15));
}

TEST_CASE("log2_of_natural encloses MPFR reference for random naturals") {
  gmp_randclass rnd(gmp_randinit_default);
  rnd.seed(20261014);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const unsigned bits = 1 + static_cast<unsigned>(rng() % 3000);
    mpz_class v = rnd.get_z_bits(bits);
    if (v == 0) v = 1;
    const Natural x{mpz_class(v)};
    const unsigned frac = 1 + static_cast<unsigned>(rng() % 300);
    const Log2Interval iv = log2_of_natural(x, frac);
    CHECK(iv.width() <= DyadicRational::pow2(1 - static_cast<std::int64_t>(frac)));
    CHECK(oracle::encloses(iv, [&](mpfr_ptr r) {
      oracle::set_natural(r, x);
      mpfr_log2(r, r, MPFR_RNDN);
    }));
  }
}

TEST_CASE("log2 refinement never widens and is deterministic") {
  for (const Natural x : {Natural(3), Natural(6), Natural::from_string("1000000000000000000000000000007")}) {
    DyadicRational prev_width = log2_of_natural(x, 1).width();
    for (unsigned f = 2; f <= 200; ++f) {
      const auto iv = log2_of_natural(x, f);
      CHECK(iv.width() <= prev_width);
      CHECK(iv == log2_of_natural(x, f));
      prev_width = iv.width();
    }
  }
}

TEST_CASE("interval add, scalar multiply, subtract on points stay exact") {
  CHECK(pt(1) + pt(2) == pt(3));
  CHECK(Log2Interval::point(dy(3, -1)) * Natural(4) == pt(6));
  CHECK(pt(3) - pt(1) == pt(2));
  CHECK((Log2Interval(dy(1), dy(2)) - Log2Interval(dy(0), dy(1))) == Log2Interval(dy(0), dy(2)));
}

TEST_CASE("interval operations contain exact rational results") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 400; ++i) {
    const auto a = random_interval(rng);
    const auto b = random_interval(rng);
    const std::vector<mpq_class> xs{to_mpq(a.lo()), to_mpq(a.hi()), (to_mpq(a.lo()) + to_mpq(a.hi())) / 2};
    const std::vector<mpq_class> ys{to_mpq(b.lo()), to_mpq(b.hi()), (to_mpq(b.lo()) + to_mpq(b.hi())) / 2};
    const auto sum = a + b;
    const auto diff = a - b;
    const auto prod = a * b;
    const Natural k(rng() % 1000);
    const auto scaled = a * k;
    const bool divisible = b.lo().sign() > 0 || b.hi().sign() < 0;
    for (const auto& x : xs) {
      CHECK(contains_q(scaled, x * mpq_class(mpz_class(k.mpz()))));
      for (const auto& y : ys) {
        CHECK(contains_q(sum, x + y));
        CHECK(contains_q(diff, x - y));
        CHECK(contains_q(prod, x * y));
        if (divisible) CHECK(contains_q(divide(a, b, 40), x / y));
      }
    }
    if (!divisible) CHECK_THROWS_AS(divide(a, b, 40), DomainError);
  }
}

TEST_CASE("interval sqrt") {
  CHECK(sqrt(pt(4), 64) == pt(2));
  CHECK(sqrt(pt(0), 64) == pt(0));
  CHECK_THROWS_AS(sqrt(Log2Interval(dy(-1), dy(1)), 8), DomainError);
  const auto r2 = sqrt(pt(2), 64);
  CHECK(oracle::encloses(r2, [](mpfr_ptr r) { mpfr_sqrt_ui(r, 2, MPFR_RNDN); }));
  CHECK(r2.width() <= DyadicRational::pow2(-63));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    auto a = random_interval(rng);
    if (a.lo().sign() < 0) a = Log2Interval(-a.lo(), a.hi().sign() < 0 ? -a.lo() : std::max(-a.lo(), a.hi()));
    const unsigned f = 1 + static_cast<unsigned>(rng() % 80);
    const auto r = sqrt(a, f);
    CHECK(r.lo() * r.lo() <= a.lo());
    CHECK(r.hi() * r.hi() >= a.hi());
    CHECK(r.lo().sign() >= 0);
  }
}

TEST_CASE("series constants") {
  const auto ln2 = const_ln2(64);
  const auto l2e = const_log2_e(64);
  CHECK(ln2.width() <= DyadicRational::pow2(-63));
  CHECK(l2e.width() <= DyadicRational::pow2(-63));
  // 0.69314718055994530941723212145817656807550013436025525412068 (mpmath)
  CHECK(oracle::encloses(ln2, [](mpfr_ptr r) { mpfr_const_log2(r, MPFR_RNDN); }));
  CHECK(oracle::encloses(l2e, [](mpfr_ptr r) {
    mpfr_const_log2(r, MPFR_RNDN);
    mpfr_ui_div(r, 1, r, MPFR_RNDN);
  }));
  CHECK((ln2 * l2e).contains(DyadicRational(1)));
  for (unsigned f : {1u, 7u, 300u, 2048u}) {
    CHECK(const_ln2(f).width() <= DyadicRational::pow2(1 - static_cast<std::int64_t>(f)));
    CHECK(const_log2_e(f).width() <= DyadicRational::pow2(1 - static_cast<std::int64_t>(f)));
    CHECK(oracle::encloses(const_ln2(f), [](mpfr_ptr r) { mpfr_const_log2(r, MPFR_RNDN); }));
  }
}

TEST_CASE("compare never guesses") {
  CHECK(compare(Log2Interval(dy(1), dy(2)), Log2Interval(dy(3), dy(4))) == Ordering::kLess);
  CHECK(compare(Log2Interval(dy(3), dy(4)), Log2Interval(dy(1), dy(2))) == Ordering::kGreater);
  CHECK(compare(Log2Interval(dy(1), dy(3)), Log2Interval(dy(2), dy(4))) == Ordering::kInconclusive);
  CHECK(compare(pt(5), pt(5)) == Ordering::kInconclusive);
}

TEST_CASE("refine escalates then reports inconclusive") {
  std::vector<unsigned> seen;
  auto [value, p] = refine(
      [&](unsigned q) -> std::optional<int> {
        seen.push_back(q);
        if (q >= 512) return 1;
        return std::nullopt;
      },
      128, "test");
  CHECK(value == 1);
  CHECK(p == 512);
  CHECK(seen == std::vector<unsigned>{128, 256, 512});
  CHECK_THROWS_AS(refine([](unsigned) -> std::optional<int> { return std::nullopt; }, 128, "never"),
                  InconclusiveError);
}

}  // TEST_SUITE
