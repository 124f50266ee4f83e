#pragma once

// Exact arithmetic in Q[x]/(m(x)) with a distinguished complex embedding.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twalex/bigfloat.hpp"
#include "twalex/error.hpp"
#include "twalex/polynomial.hpp"

namespace twalex {

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline mpq_class parse_rational(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + str + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  const mpz_class numerator(n);
  const mpz_class denominator{std::string(den)};
  if (denominator == 0) throw std::invalid_argument("zero denominator: '" + str + "'");
  mpq_class q(numerator, denominator);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + str + "'");
  q.canonicalize();
  return q;
}

/// Q[x]/(m(x)) for a monic integer polynomial m together with an approximate
/// root that selects the complex embedding. The root is never chosen by this
/// class; the hint must lie in the Newton basin of exactly one root.
class NumberField {
 public:
  /// `minpoly` lists coefficients constant-first and must be monic.
  NumberField(std::vector<mpz_class> minpoly, std::optional<std::pair<std::string, std::string>> hint = {})
      : coeffs_(std::move(minpoly)), hint_(std::move(hint)) {
    if (coeffs_.size() < 2) throw Error("field", "minimal polynomial must have degree >= 1");
    if (coeffs_.back() != 1) throw Error("field", "minimal polynomial must be monic");
    std::vector<mpq_class> q;
    for (const auto& c : coeffs_) q.emplace_back(c);
    m_ = Poly<mpq_class>(std::move(q));
    if (degree() >= 2) validate_hint();
  }

  int degree() const { return m_.degree(); }
  const Poly<mpq_class>& minimal_polynomial() const { return m_; }
  const std::vector<mpz_class>& minpoly_coefficients() const { return coeffs_; }
  const std::optional<std::pair<std::string, std::string>>& hint() const { return hint_; }

  bool same_as(const NumberField& o) const { return this == &o || coeffs_ == o.coeffs_; }

  /// The distinguished root of m, refined by Newton iteration to `prec` bits.
  BigComplex root(mpfr_prec_t prec = kDefaultPrecision) const {
    if (prec < kMinPrecision) throw Error("field", "precision must be at least 64 bits");
    if (degree() == 1) return BigComplex(BigFloat(mpq_class(-coeffs_[0]), prec), BigFloat(prec));
    const mpfr_prec_t work = prec + 32;
    BigComplex z(BigFloat(hint_->first, work), BigFloat(hint_->second, work));
    std::vector<BigComplex> m, dm;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      m.emplace_back(BigFloat(mpq_class(coeffs_[i]), work), BigFloat(work));
      if (i > 0) dm.emplace_back(BigFloat(mpq_class(coeffs_[i] * static_cast<long>(i)), work), BigFloat(work));
    }
    auto horner = [&](const std::vector<BigComplex>& p) {
      BigComplex acc(work);
      for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
      return acc;
    };
    // Quadratic convergence doubles the correct bits per step; allow slack.
    const int max_iter = 64 + 2 * static_cast<int>(std::log2(static_cast<double>(work)));
    int converged_steps = 0;
    for (int it = 0; it < max_iter; ++it) {
      BigComplex step = horner(m) / horner(dm);
      z = z - step;
      BigFloat scale = abs(z);
      if (scale < BigFloat(1L, work)) scale = BigFloat(1L, work);
      if (abs(step) <= ldexp(scale, -static_cast<long>(prec) - 8)) {
        if (++converged_steps == 2) {
          return BigComplex(round_to(z.re, prec), round_to(z.im, prec));
        }
      }
    }
    throw Error("field", "Newton iteration for the embedding did not converge");
  }

 private:
  static BigFloat round_to(const BigFloat& x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
  }

  void validate_hint() {
    if (!hint_) throw Error("field", "an embedding hint is required for fields of degree >= 2");
    if (gcd(m_, m_.derivative()).degree() != 0)
      throw Error("field", "minimal polynomial is not squarefree");
    std::complex<double> h;
    try {
      h = {BigFloat(hint_->first, 64).to_double(), BigFloat(hint_->second, 64).to_double()};
    } catch (const std::invalid_argument& e) {
      throw Error("field", e.what());
    }
    const auto roots = approximate_roots();
    // Newton from the hint in double precision must land on the root nearest to it.
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < roots.size(); ++i)
      if (std::abs(roots[i] - h) < std::abs(roots[nearest] - h)) nearest = i;
    std::complex<double> z = h;
    for (int it = 0; it < 200; ++it) z -= eval_d(z, false) / eval_d(z, true);
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (i != nearest) sep = std::min(sep, std::abs(roots[i] - roots[nearest]));
    if (!std::isfinite(std::abs(z)) || std::abs(z - roots[nearest]) > 1e-6 * std::max(1.0, sep))
      throw Error("field", "embedding hint does not converge to a single root of the minimal polynomial");
  }

  std::complex<double> eval_d(std::complex<double> z, bool derivative) const {
    std::complex<double> acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > (derivative ? 1u : 0u);) {
      double c = coeffs_[i].get_d() * (derivative ? static_cast<double>(i) : 1.0);
      acc = acc * z + c;
    }
    return acc;
  }

  /// All roots by Durand-Kerner iteration (validation only).
  std::vector<std::complex<double>> approximate_roots() const {
    const int d = degree();
    std::vector<std::complex<double>> r(static_cast<std::size_t>(d));
    const std::complex<double> seed(0.4, 0.9);
    for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = std::pow(seed, i);
    for (int it = 0; it < 2000; ++it) {
      for (int i = 0; i < d; ++i) {
        std::complex<double> den = 1;
        for (int j = 0; j < d; ++j)
          if (j != i) den *= r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] -= eval_d(r[static_cast<std::size_t>(i)], false) / den;
      }
    }
    return r;
  }

  std::vector<mpz_class> coeffs_;
  Poly<mpq_class> m_;
  std::optional<std::pair<std::string, std::string>> hint_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element c0 + c1 x + ... + c_{d-1} x^{d-1} of a number field. An element
/// without a field is a rational constant and coerces into any field; this
/// lets generic code build 0 and 1 from integers.
class NFElement {
 public:
  NFElement() : c_{mpq_class(0)} {}
  NFElement(int v) : c_{mpq_class(v)} {}          // NOLINT
  NFElement(long v) : c_{mpq_class(v)} {}         // NOLINT
  NFElement(const mpq_class& q) : c_{q} {}        // NOLINT
  NFElement(FieldPtr field, std::vector<mpq_class> coeffs) : field_(std::move(field)) {
    if (!field_) {
      if (coeffs.size() > 1) throw std::invalid_argument("coefficient vector needs a number field");
      c_ = coeffs.empty() ? std::vector<mpq_class>{mpq_class(0)} : std::move(coeffs);
      return;
    }
    c_ = reduce(*field_, std::move(coeffs));
  }

  static NFElement generator(const FieldPtr& field) {
    return NFElement(field, {mpq_class(0), mpq_class(1)});
  }

  const FieldPtr& field() const { return field_; }
  /// Number of stored coefficients: the field degree, or 1 for a free rational.
  int width() const { return static_cast<int>(c_.size()); }
  const mpq_class& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  friend bool is_zero(const NFElement& a) {
    for (const auto& c : a.c_)
      if (sgn(c) != 0) return false;
    return true;
  }

  friend bool operator==(const NFElement& a, const NFElement& b) {
    common_field(a, b);
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    const mpq_class zero(0);
    for (std::size_t i = 0; i < n; ++i) {
      const mpq_class& x = i < a.c_.size() ? a.c_[i] : zero;
      const mpq_class& y = i < b.c_.size() ? b.c_[i] : zero;
      if (x != y) return false;
    }
    return true;
  }

  friend NFElement operator+(const NFElement& a, const NFElement& b) { return add(a, b, 1); }
  friend NFElement operator-(const NFElement& a, const NFElement& b) { return add(a, b, -1); }
  friend NFElement operator-(const NFElement& a) {
    NFElement r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend NFElement operator*(const NFElement& a, const NFElement& b) {
    if (a.c_.size() == 1) return scale(b, a.c_[0], a.field_);
    if (b.c_.size() == 1) return scale(a, b.c_[0], b.field_);
    FieldPtr f = common_field(a, b);
    std::vector<mpq_class> prod(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    NFElement r;
    r.field_ = f;
    r.c_ = reduce(*f, std::move(prod));
    return r;
  }

  NFElement inverse() const {
    if (is_zero(*this)) throw std::domain_error("division by zero in number field");
    if (c_.size() == 1) {
      NFElement r = *this;
      r.c_[0] = 1 / c_[0];
      return r;
    }
    auto eg = ext_gcd(Poly<mpq_class>(c_), field_->minimal_polynomial());
    if (eg.g.degree() != 0)
      throw std::domain_error("element is not invertible: minimal polynomial is reducible");
    return NFElement(field_, eg.s.coefficients());
  }

  friend NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

  NFElement& operator+=(const NFElement& o) { return *this = *this + o; }
  NFElement& operator-=(const NFElement& o) { return *this = *this - o; }
  NFElement& operator*=(const NFElement& o) { return *this = *this * o; }

  /// Value under the distinguished embedding.
  BigComplex embed(mpfr_prec_t prec = kDefaultPrecision) const {
    if (c_.size() == 1) return BigComplex(BigFloat(c_[0], prec), BigFloat(prec));
    const BigComplex z = field_->root(prec);
    BigComplex acc(prec);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * z + BigComplex(BigFloat(*it, prec), BigFloat(prec));
    return acc;
  }

  /// Bracketed coefficient vector, e.g. "[1,-1/2]".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += c_[i].get_str();
    }
    return s + "]";
  }

 private:
  static FieldPtr common_field(const NFElement& a, const NFElement& b) {
    if (!a.field_) return b.field_;
    if (!b.field_ || a.field_ == b.field_) return a.field_;
    if (!a.field_->same_as(*b.field_)) throw std::invalid_argument("elements of different number fields");
    return a.field_;
  }

  static std::vector<mpq_class> reduce(const NumberField& f, std::vector<mpq_class> v) {
    const auto& m = f.minimal_polynomial();
    const std::size_t d = static_cast<std::size_t>(f.degree());
    for (std::size_t k = v.size(); k-- > d;) {
      if (sgn(v[k]) == 0) continue;
      mpq_class c = v[k];
      for (std::size_t i = 0; i <= d; ++i) v[k - d + i] -= c * m[i];
    }
    v.resize(d, mpq_class(0));
    return v;
  }

  static NFElement scale(const NFElement& a, const mpq_class& s, const FieldPtr& other) {
    NFElement r = a;
    if (!r.field_ && other) {
      r.field_ = other;
      r.c_.resize(static_cast<std::size_t>(other->degree()), mpq_class(0));
    } else if (r.field_ && other) {
      common_field(a, NFElement(other, {}));
    }
    for (auto& c : r.c_) c *= s;
    return r;
  }

  static NFElement add(const NFElement& a, const NFElement& b, int sign) {
    NFElement r;
    r.field_ = common_field(a, b);
    const std::size_t n = r.field_ ? static_cast<std::size_t>(r.field_->degree()) : 1;
    r.c_.assign(n, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      if (sign > 0) r.c_[i] += b.c_[i];
      else r.c_[i] -= b.c_[i];
    }
    return r;
  }

  FieldPtr field_;
  std::vector<mpq_class> c_;
};

/// Parses a bracketed coefficient vector "[c0,c1,...]" with 1..d entries.
inline NFElement parse_nf_element(std::string_view text, const FieldPtr& field) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("expected bracketed coefficient vector, got '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<mpq_class> coeffs;
  while (true) {
    auto comma = s.find(',');
    std::string_view item = s.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    coeffs.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  const std::size_t d = field ? static_cast<std::size_t>(field->degree()) : 1;
  if (coeffs.size() > d)
    throw std::invalid_argument("coefficient vector longer than the field degree: '" + std::string(text) + "'");
  return NFElement(field, std::move(coeffs));
}

}  // namespace twalex
