#pragma once

// Exact naturals, dyadic rationals and outward-rounded intervals.
//
// Every inequality the bound engines decide goes through Log2Interval and
// compare(): an interval always contains the real value it encloses, and a
// comparison only answers LESS/GREATER when the enclosures are disjoint.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "embound/errors.hpp"

namespace embound {

inline constexpr unsigned kDefaultPrecision = 128;
inline constexpr unsigned kMaxPrecision = 4096;
inline constexpr std::uint64_t kMaxExactFactorial = std::uint64_t{1} << 20;

/// Arbitrary-precision nonnegative integer.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT: implicit by design of a numeric type
  explicit Natural(mpz_class v);

  static Natural from_string(std::string_view decimal);
  static Natural pow2(std::uint64_t k);
  /// Exact k! for k <= 2^20.
  static Natural factorial(std::uint64_t k);

  Natural pow(std::uint64_t exponent) const;

  /// Number of significant bits; 0 for zero.
  std::uint64_t bit_length() const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool is_power_of_two() const;
  bool fits_u64() const { return bit_length() <= 64; }
  std::uint64_t to_u64() const;
  std::string to_string() const { return value_.get_str(); }
  const mpz_class& mpz() const { return value_; }

  Natural& operator+=(const Natural& o) { value_ += o.value_; return *this; }
  Natural& operator*=(const Natural& o) { value_ *= o.value_; return *this; }
  /// Throws DomainError when the result would be negative.
  Natural& operator-=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  /// Floor division; throws DomainError on division by zero.
  friend Natural operator/(const Natural& a, const Natural& b);
  friend Natural operator%(const Natural& a, const Natural& b);
  friend Natural operator<<(const Natural& a, std::uint64_t k);
  friend Natural operator>>(const Natural& a, std::uint64_t k);

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);

/// mantissa * 2^exponent, kept canonical (odd mantissa, or zero with exponent 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(std::int64_t v);  // NOLINT
  DyadicRational(const Natural& n);  // NOLINT
  DyadicRational(mpz_class mantissa, std::int64_t exponent);

  static DyadicRational pow2(std::int64_t k) { return {mpz_class(1), k}; }
  /// Inverse of to_string().
  static DyadicRational parse(std::string_view text);

  const mpz_class& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return exponent_ >= 0; }

  DyadicRational operator-() const { return {-mantissa_, exponent_}; }
  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) { return a + (-b); }
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
    return {a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_};
  }

  /// Exact multiplication by 2^k.
  DyadicRational shifted(std::int64_t k) const;

  mpz_class floor() const;
  mpz_class ceil() const;
  /// Largest (smallest) multiple of 2^-frac_bits not above (below) this value.
  DyadicRational floor_to(unsigned frac_bits) const;
  DyadicRational ceil_to(unsigned frac_bits) const;

  /// Approximation for display; may be +-inf for huge magnitudes.
  double to_double() const;
  /// Exact: "[-]M" for integers, "[-]M/2^K" otherwise (M odd). Integers with
  /// exponent beyond 4096 are written "M*2^K".
  std::string to_string() const;

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exponent_ == b.exponent_ && cmp(a.mantissa_, b.mantissa_) == 0;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

 private:
  void canonicalize();

  mpz_class mantissa_;
  std::int64_t exponent_ = 0;
};

/// floor / ceil of a/b at frac_bits fractional bits; b must be nonzero.
DyadicRational div_floor(const DyadicRational& a, const DyadicRational& b, unsigned frac_bits);
DyadicRational div_ceil(const DyadicRational& a, const DyadicRational& b, unsigned frac_bits);

/// Closed interval [lo, hi] with dyadic endpoints. Used for bounds on log2 of
/// large quantities and for the real constants feeding them; every operation
/// rounds outward so the enclosed real value is never lost.
class Log2Interval {
 public:
  Log2Interval() = default;
  Log2Interval(DyadicRational lo, DyadicRational hi);
  static Log2Interval point(DyadicRational v) { return {v, v}; }

  const DyadicRational& lo() const { return lo_; }
  const DyadicRational& hi() const { return hi_; }
  DyadicRational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const DyadicRational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Log2Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool strictly_contains(const DyadicRational& x) const { return lo_ < x && x < hi_; }

  Log2Interval operator-() const { return {-hi_, -lo_}; }
  Log2Interval shifted(std::int64_t k) const { return {lo_.shifted(k), hi_.shifted(k)}; }

  friend Log2Interval operator+(const Log2Interval& a, const Log2Interval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend Log2Interval operator-(const Log2Interval& a, const Log2Interval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend Log2Interval operator*(const Log2Interval& a, const Log2Interval& b);
  friend Log2Interval operator*(const Log2Interval& a, const Natural& k) {
    const DyadicRational s(k);
    return {a.lo_ * s, a.hi_ * s};
  }

  friend bool operator==(const Log2Interval&, const Log2Interval&) = default;

  std::string to_string() const;

 private:
  DyadicRational lo_;
  DyadicRational hi_;
};

/// Enclosure of sqrt over the interval; throws DomainError if lo < 0.
Log2Interval sqrt(const Log2Interval& a, unsigned frac_bits);
/// Enclosure of a / b; throws DomainError if b contains zero.
Log2Interval divide(const Log2Interval& a, const Log2Interval& b, unsigned frac_bits);
/// Widen endpoints to multiples of 2^-frac_bits.
Log2Interval round_outward(const Log2Interval& a, unsigned frac_bits);

/// Encloses log2(x) with width <= 2^(1-frac_bits); a point for powers of two.
Log2Interval log2_of_natural(const Natural& x, unsigned frac_bits);
/// Encloses ln(x) = log2(x) * ln 2.
Log2Interval ln_of_natural(const Natural& x, unsigned frac_bits);

Log2Interval const_ln2(unsigned frac_bits);
Log2Interval const_log2_e(unsigned frac_bits);

enum class Ordering { kLess, kGreater, kInconclusive };

Ordering compare(const Log2Interval& a, const Log2Interval& b);
std::string_view to_string(Ordering o);

/// Runs decide(precision) at start, 2*start, ... up to kMaxPrecision until it
/// returns a value. Throws InconclusiveError naming `what` otherwise.
template <class Decide>
auto refine(Decide&& decide, unsigned start_precision, std::string_view what)
    -> std::pair<typename decltype(decide(0u))::value_type, unsigned> {
  unsigned p = start_precision == 0 ? 1 : start_precision;
  for (;;) {
    if (auto r = decide(p)) return {std::move(*r), p};
    if (p >= kMaxPrecision) break;
    p = p * 2 > kMaxPrecision ? kMaxPrecision : p * 2;
  }
  throw InconclusiveError("inconclusive at max precision (" + std::to_string(kMaxPrecision) +
                          " bits): " + std::string(what));
}

}  // namespace embound
