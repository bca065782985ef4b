#pragma once

// Independent high-precision reference values (MPFR) for checking
// enclosures. Test-only: the library never links MPFR.

#include <mpfr.h>

#include <functional>
#include <string>

#include "embound/exactmath.hpp"

namespace oracle {

inline constexpr mpfr_prec_t kRefPrecision = 8192;

class Real {
 public:
  explicit Real(mpfr_prec_t prec = kRefPrecision) { mpfr_init2(v_, prec); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

inline void set_dyadic(Real& out, const embound::DyadicRational& d) {
  const auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(d.mantissa().get_mpz_t(), 2) + 2);
  mpfr_set_prec(out.get(), std::max<mpfr_prec_t>(bits, 64));
  mpfr_set_z(out.get(), d.mantissa().get_mpz_t(), MPFR_RNDN);
  mpfr_mul_2si(out.get(), out.get(), static_cast<long>(d.exponent()), MPFR_RNDN);
}

/// True iff lo <= ref <= hi up to a relative tolerance of 2^-8000, where ref
/// is the reference computed by `compute` at kRefPrecision bits.
inline bool encloses(const embound::Log2Interval& iv, const std::function<void(mpfr_ptr)>& compute) {
  Real ref;
  compute(ref.get());
  Real tol;
  mpfr_abs(tol.get(), ref.get(), MPFR_RNDU);
  mpfr_mul_2si(tol.get(), tol.get(), -8000, MPFR_RNDU);
  Real eps;
  mpfr_set_ui_2exp(eps.get(), 1, -8000, MPFR_RNDU);
  mpfr_add(tol.get(), tol.get(), eps.get(), MPFR_RNDU);

  Real lo, hi, up, down;
  set_dyadic(lo, iv.lo());
  set_dyadic(hi, iv.hi());
  mpfr_add(up.get(), ref.get(), tol.get(), MPFR_RNDU);
  mpfr_sub(down.get(), ref.get(), tol.get(), MPFR_RNDD);
  return mpfr_cmp(lo.get(), up.get()) <= 0 && mpfr_cmp(down.get(), hi.get()) <= 0;
}

inline void set_natural(mpfr_ptr out, const embound::Natural& n) {
  mpfr_set_z(out, n.mpz().get_mpz_t(), MPFR_RNDN);
}

inline double log2_ref(const embound::Natural& n) {
  Real r;
  set_natural(r.get(), n);
  mpfr_log2(r.get(), r.get(), MPFR_RNDN);
  return r.to_double();
}

}  // namespace oracle
