#include "embound/exactmath.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace embound {

// ---------------------------------------------------------------- Natural

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw DomainError("Natural: negative value");
}

Natural Natural::from_string(std::string_view decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("Natural: not a decimal natural: '" + std::string(decimal) + "'");
  }
  return Natural(mpz_class(std::string(decimal), 10));
}

Natural Natural::pow2(std::uint64_t k) {
  Natural r;
  mpz_setbit(r.value_.get_mpz_t(), k);
  return r;
}

Natural Natural::factorial(std::uint64_t k) {
  if (k > kMaxExactFactorial) {
    throw CapabilityError("exact factorial capped at 2^20, got " + std::to_string(k));
  }
  Natural r;
  mpz_fac_ui(r.value_.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Natural Natural::pow(std::uint64_t exponent) const {
  Natural r;
  mpz_pow_ui(r.value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

std::uint64_t Natural::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool Natural::is_power_of_two() const {
  return !is_zero() && mpz_popcount(value_.get_mpz_t()) == 1;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw CapabilityError("Natural does not fit in 64 bits");
  return mpz_get_ui(value_.get_mpz_t());
}

Natural& Natural::operator-=(const Natural& o) {
  if (cmp(value_, o.value_) < 0) throw DomainError("Natural subtraction would be negative");
  value_ -= o.value_;
  return *this;
}

Natural operator/(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw DomainError("Natural division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Natural(std::move(q));
}

Natural operator%(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw DomainError("Natural division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Natural(std::move(r));
}

Natural operator<<(const Natural& a, std::uint64_t k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), a.value_.get_mpz_t(), k);
  return Natural(std::move(r));
}

Natural operator>>(const Natural& a, std::uint64_t k) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), a.value_.get_mpz_t(), k);
  return Natural(std::move(r));
}

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(r));
}

Natural lcm(const Natural& a, const Natural& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(r));
}

// --------------------------------------------------------- DyadicRational

namespace {

mpz_class shl(const mpz_class& v, std::uint64_t k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), k);
  return r;
}

}  // namespace

DyadicRational::DyadicRational(std::int64_t v) : mantissa_(static_cast<long>(v)) { canonicalize(); }

DyadicRational::DyadicRational(const Natural& n) : mantissa_(n.mpz()) { canonicalize(); }

DyadicRational::DyadicRational(mpz_class mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  canonicalize();
}

void DyadicRational::canonicalize() {
  if (sgn(mantissa_) == 0) {
    exponent_ = 0;
    return;
  }
  const auto tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<std::int64_t>(tz);
  }
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto e = std::min(a.exponent_, b.exponent_);
  return {shl(a.mantissa_, static_cast<std::uint64_t>(a.exponent_ - e)) +
              shl(b.mantissa_, static_cast<std::uint64_t>(b.exponent_ - e)),
          e};
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  return (a - b).sign() <=> 0;
}

DyadicRational DyadicRational::shifted(std::int64_t k) const {
  if (is_zero()) return {};
  return {mantissa_, exponent_ + k};
}

mpz_class DyadicRational::floor() const {
  mpz_class r;
  if (exponent_ >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<std::uint64_t>(exponent_));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<std::uint64_t>(-exponent_));
  }
  return r;
}

mpz_class DyadicRational::ceil() const {
  mpz_class r;
  if (exponent_ >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<std::uint64_t>(exponent_));
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<std::uint64_t>(-exponent_));
  }
  return r;
}

DyadicRational DyadicRational::floor_to(unsigned frac_bits) const {
  const auto f = static_cast<std::int64_t>(frac_bits);
  return {shifted(f).floor(), -f};
}

DyadicRational DyadicRational::ceil_to(unsigned frac_bits) const {
  const auto f = static_cast<std::int64_t>(frac_bits);
  return {shifted(f).ceil(), -f};
}

double DyadicRational::to_double() const {
  if (is_zero()) return 0.0;
  long e2 = 0;
  const double d = mpz_get_d_2exp(&e2, mantissa_.get_mpz_t());
  const auto total = static_cast<long double>(e2) + static_cast<long double>(exponent_);
  if (total > 100000) return d > 0 ? HUGE_VAL : -HUGE_VAL;
  if (total < -100000) return 0.0;
  return std::ldexp(d, static_cast<int>(total));
}

std::string DyadicRational::to_string() const {
  if (exponent_ < 0) return mantissa_.get_str() + "/2^" + std::to_string(-exponent_);
  if (exponent_ > 4096) return mantissa_.get_str() + "*2^" + std::to_string(exponent_);
  return shl(mantissa_, static_cast<std::uint64_t>(exponent_)).get_str();
}

DyadicRational DyadicRational::parse(std::string_view text) {
  auto fail = [&] { return DomainError("not a dyadic rational: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    mpz_class v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10) != 0) throw fail();
    return v;
  };
  auto parse_exp = [&](std::string_view s) -> std::int64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) throw fail();
    return std::stoll(std::string(s));
  };
  if (auto pos = text.find("/2^"); pos != std::string_view::npos) {
    return {parse_int(text.substr(0, pos)), -parse_exp(text.substr(pos + 3))};
  }
  if (auto pos = text.find("*2^"); pos != std::string_view::npos) {
    return {parse_int(text.substr(0, pos)), parse_exp(text.substr(pos + 3))};
  }
  return {parse_int(text), 0};
}

namespace {

// a/b scaled by 2^frac_bits, as an integer quotient with the given rounding.
mpz_class scaled_quotient(const DyadicRational& a, const DyadicRational& b, unsigned frac_bits, bool up) {
  if (b.is_zero()) throw DomainError("division by zero");
  const std::int64_t s = a.exponent() - b.exponent() + static_cast<std::int64_t>(frac_bits);
  mpz_class num = a.mantissa();
  mpz_class den = b.mantissa();
  if (s >= 0) {
    num = shl(num, static_cast<std::uint64_t>(s));
  } else {
    den = shl(den, static_cast<std::uint64_t>(-s));
  }
  mpz_class q;
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return q;
}

}  // namespace

DyadicRational div_floor(const DyadicRational& a, const DyadicRational& b, unsigned frac_bits) {
  return {scaled_quotient(a, b, frac_bits, false), -static_cast<std::int64_t>(frac_bits)};
}

DyadicRational div_ceil(const DyadicRational& a, const DyadicRational& b, unsigned frac_bits) {
  return {scaled_quotient(a, b, frac_bits, true), -static_cast<std::int64_t>(frac_bits)};
}

// ------------------------------------------------------------ Log2Interval

Log2Interval::Log2Interval(DyadicRational lo, DyadicRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi: [" + lo_.to_string() + ", " + hi_.to_string() + "]");
}

Log2Interval operator*(const Log2Interval& a, const Log2Interval& b) {
  const std::array<DyadicRational, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return {*std::min_element(p.begin(), p.end()), *std::max_element(p.begin(), p.end())};
}

std::string Log2Interval::to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

namespace {

DyadicRational sqrt_rounded(const DyadicRational& d, unsigned frac_bits, bool up) {
  const DyadicRational scaled = d.shifted(2 * static_cast<std::int64_t>(frac_bits));
  const mpz_class v = up ? scaled.ceil() : scaled.floor();
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (up && r * r < v) r += 1;
  return {r, -static_cast<std::int64_t>(frac_bits)};
}

}  // namespace

Log2Interval sqrt(const Log2Interval& a, unsigned frac_bits) {
  if (a.lo().sign() < 0) throw DomainError("sqrt of interval with negative lower endpoint");
  return {sqrt_rounded(a.lo(), frac_bits, false), sqrt_rounded(a.hi(), frac_bits, true)};
}

Log2Interval divide(const Log2Interval& a, const Log2Interval& b, unsigned frac_bits) {
  if (b.lo().sign() <= 0 && b.hi().sign() >= 0) throw DomainError("division by interval containing zero");
  const std::array<DyadicRational, 4> lo{div_floor(a.lo(), b.lo(), frac_bits), div_floor(a.lo(), b.hi(), frac_bits),
                                         div_floor(a.hi(), b.lo(), frac_bits), div_floor(a.hi(), b.hi(), frac_bits)};
  const std::array<DyadicRational, 4> hi{div_ceil(a.lo(), b.lo(), frac_bits), div_ceil(a.lo(), b.hi(), frac_bits),
                                         div_ceil(a.hi(), b.lo(), frac_bits), div_ceil(a.hi(), b.hi(), frac_bits)};
  return {*std::min_element(lo.begin(), lo.end()), *std::max_element(hi.begin(), hi.end())};
}

Log2Interval round_outward(const Log2Interval& a, unsigned frac_bits) {
  return {a.lo().floor_to(frac_bits), a.hi().ceil_to(frac_bits)};
}

namespace {

// Fractional bits of log2(y) for y = z / 2^P in [1, 2), by repeated squaring.
// Rounding each square down (up) keeps the bits a lower (upper) bound.
mpz_class squaring_bits(mpz_class z, unsigned P, unsigned k, bool up) {
  const mpz_class two = shl(mpz_class(1), P + 1);
  mpz_class bits = 0;
  for (unsigned i = 0; i < k; ++i) {
    z *= z;
    if (up) {
      mpz_cdiv_q_2exp(z.get_mpz_t(), z.get_mpz_t(), P);
    } else {
      mpz_fdiv_q_2exp(z.get_mpz_t(), z.get_mpz_t(), P);
    }
    bits <<= 1;
    if (z >= two) {
      bits += 1;
      if (up) {
        mpz_cdiv_q_2exp(z.get_mpz_t(), z.get_mpz_t(), 1);
      } else {
        mpz_fdiv_q_2exp(z.get_mpz_t(), z.get_mpz_t(), 1);
      }
    }
  }
  return bits;
}

}  // namespace

Log2Interval log2_of_natural(const Natural& x, unsigned frac_bits) {
  if (x.is_zero()) throw DomainError("log2 of zero");
  if (frac_bits == 0) throw DomainError("log2_of_natural needs frac_bits >= 1");
  const std::uint64_t e = x.bit_length() - 1;
  if (x.is_power_of_two()) return Log2Interval::point(DyadicRational(Natural(e)));

  const auto k = frac_bits;
  const DyadicRational max_width = DyadicRational::pow2(1 - static_cast<std::int64_t>(k));
  for (unsigned guard = 64;; guard *= 2) {
    const unsigned P = k + guard;
    mpz_class y_lo;
    mpz_class y_hi;
    if (e <= P) {
      y_lo = shl(x.mpz(), P - e);
      y_hi = y_lo;
    } else {
      mpz_fdiv_q_2exp(y_lo.get_mpz_t(), x.mpz().get_mpz_t(), e - P);
      mpz_cdiv_q_2exp(y_hi.get_mpz_t(), x.mpz().get_mpz_t(), e - P);
    }
    const mpz_class b_lo = squaring_bits(y_lo, P, k, false);
    const mpz_class b_hi = squaring_bits(y_hi, P, k, true);
    const mpz_class base = shl(mpz_class(static_cast<unsigned long>(e)), k);
    const auto kk = -static_cast<std::int64_t>(k);
    Log2Interval result(DyadicRational(base + b_lo, kk), DyadicRational(base + b_hi + 1, kk));
    if (result.width() <= max_width) return result;
  }
}

Log2Interval ln_of_natural(const Natural& x, unsigned frac_bits) {
  return round_outward(log2_of_natural(x, frac_bits + 4) * const_ln2(frac_bits + 8), frac_bits + 2);
}

Log2Interval const_ln2(unsigned frac_bits) {
  if (frac_bits == 0) throw DomainError("const_ln2 needs frac_bits >= 1");
  // ln 2 = sum_{j>=1} 1 / (j 2^j); the tail after P terms is below 2^-P.
  const unsigned P = frac_bits + 16 + static_cast<unsigned>(std::bit_width(frac_bits));
  mpz_class lo = 0;
  mpz_class hi = 1;
  for (unsigned j = 1; j <= P; ++j) {
    const mpz_class num = shl(mpz_class(1), P - j);
    mpz_class q;
    mpz_class r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), j);
    lo += q;
    hi += q;
    if (sgn(r) != 0) hi += 1;
  }
  const auto e = -static_cast<std::int64_t>(P);
  return {DyadicRational(lo, e), DyadicRational(hi, e)};
}

Log2Interval const_log2_e(unsigned frac_bits) {
  if (frac_bits == 0) throw DomainError("const_log2_e needs frac_bits >= 1");
  const unsigned p = frac_bits + 4;
  const Log2Interval ln2 = const_ln2(p);
  return {div_floor(DyadicRational(1), ln2.hi(), p), div_ceil(DyadicRational(1), ln2.lo(), p)};
}

Ordering compare(const Log2Interval& a, const Log2Interval& b) {
  if (a.hi() < b.lo()) return Ordering::kLess;
  if (a.lo() > b.hi()) return Ordering::kGreater;
  return Ordering::kInconclusive;
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "LESS";
    case Ordering::kGreater: return "GREATER";
    case Ordering::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace embound
