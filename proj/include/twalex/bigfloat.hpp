#pragma once

// RAII wrapper over MPFR reals and a minimal complex type on top of it.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace twalex {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr mpfr_prec_t kMinPrecision = 64;

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long v, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_si(v_, v, MPFR_RNDN); }
  BigFloat(const mpq_class& q, mpfr_prec_t prec) : BigFloat(prec) {
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  /// Decimal string such as "-0.5" or "8.66e-1".
  BigFloat(std::string_view decimal, mpfr_prec_t prec) : BigFloat(prec) {
    std::string s(decimal);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size())
      throw std::invalid_argument("not a decimal number: '" + s + "'");
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// printf %g rendering with `digits` significant digits.
  std::string to_string(int digits) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rg", digits, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }
  /// Fixed-point rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rf", decimals, v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }
  /// Enough significant digits to represent the full binary precision.
  int full_digits() const { return static_cast<int>(static_cast<double>(precision()) * 0.30103) + 1; }

#define TWALEX_BIGFLOAT_BINOP(op, fn)                                          \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {          \
    BigFloat r(std::max(a.precision(), b.precision()));                        \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                           \
    return r;                                                                  \
  }
  TWALEX_BIGFLOAT_BINOP(+, mpfr_add)
  TWALEX_BIGFLOAT_BINOP(-, mpfr_sub)
  TWALEX_BIGFLOAT_BINOP(*, mpfr_mul)
  TWALEX_BIGFLOAT_BINOP(/, mpfr_div)
#undef TWALEX_BIGFLOAT_BINOP

  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  /// a * 2^e
  friend BigFloat ldexp(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    if (den.is_zero()) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
};

}  // namespace twalex
