#pragma once

// Laurent polynomials in t over a number field, rational functions in normal
// form, and determinants of polynomial matrices by evaluation/interpolation.

#include <algorithm>
#include <cctype>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twalex/error.hpp"
#include "twalex/matrix.hpp"
#include "twalex/number_field.hpp"
#include "twalex/polynomial.hpp"

namespace twalex {

using NFPoly = Poly<NFElement>;

/// Finite sum of c_k t^k, k in Z. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, NFElement>;

  LaurentPolynomial() = default;
  LaurentPolynomial(int c) : LaurentPolynomial(NFElement(c)) {}  // NOLINT
  LaurentPolynomial(const NFElement& c) { add_term(0, c); }     // NOLINT

  static LaurentPolynomial monomial(const NFElement& c, int k) {
    LaurentPolynomial p;
    p.add_term(k, c);
    return p;
  }
  static LaurentPolynomial t() { return monomial(NFElement(1), 1); }

  /// t^shift * p(t)
  static LaurentPolynomial from_poly(const NFPoly& p, int shift = 0) {
    LaurentPolynomial r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term(i + shift, p[static_cast<std::size_t>(i)]);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int lowest() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int highest() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  NFElement coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? NFElement(0) : it->second;
  }
  const NFElement& lowest_coeff() const { return terms_.begin()->second; }
  const NFElement& leading_coeff() const { return terms_.rbegin()->second; }

  /// Ordinary polynomial t^{-lowest()} * p.
  NFPoly to_poly() const { return terms_.empty() ? NFPoly() : to_poly(lowest()); }

  /// Ordinary polynomial t^{-base} * p; requires base <= lowest().
  NFPoly to_poly(int base) const {
    if (terms_.empty()) return {};
    if (base > lowest()) throw std::invalid_argument("to_poly base above the lowest exponent");
    std::vector<NFElement> v(static_cast<std::size_t>(highest() - base) + 1, NFElement(0));
    for (const auto& [k, c] : terms_) v[static_cast<std::size_t>(k - base)] = c;
    return NFPoly(std::move(v));
  }

  /// t^k * p
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  void add_term(int k, const NFElement& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) { return LaurentPolynomial() - a; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [i, c] : a.terms_)
      for (const auto& [j, d] : b.terms_) r.add_term(i + j, c * d);
    return r;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

  friend bool is_zero(const LaurentPolynomial& p) { return p.is_zero(); }

 private:
  Terms terms_;
};

using PolyMatrix = Matrix<LaurentPolynomial>;

/// Exact value at a nonzero point.
inline NFElement evaluate(const LaurentPolynomial& p, const NFElement& at) {
  if (is_zero(at)) throw std::domain_error("Laurent polynomial evaluated at zero");
  if (p.is_zero()) return NFElement(0);
  NFElement v = p.to_poly().eval(at);
  const int low = p.lowest();
  NFElement base = low < 0 ? at.inverse() : at;
  for (int i = 0; i < (low < 0 ? -low : low); ++i) v = v * base;
  return v;
}

/// Division by (t - r): returns quotient and remainder p(r).
inline std::pair<NFPoly, NFElement> synthetic_divide(const NFPoly& p, const NFElement& r) {
  if (p.is_zero()) return {NFPoly(), NFElement(0)};
  const int n = p.degree();
  std::vector<NFElement> q(static_cast<std::size_t>(std::max(n, 0)), NFElement(0));
  NFElement carry = p[static_cast<std::size_t>(n)];
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<std::size_t>(k)] = carry;
    carry = p[static_cast<std::size_t>(k)] + carry * r;
  }
  return {NFPoly(std::move(q)), carry};
}

/// gcd with lowest exponent 0 and leading coefficient 1.
inline LaurentPolynomial gcd(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  return LaurentPolynomial::from_poly(gcd(p.to_poly(), q.to_poly()));
}

/// p / q, which must be exact in the Laurent ring.
inline LaurentPolynomial divide_exact(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (q.is_zero()) throw std::domain_error("Laurent polynomial division by zero");
  if (p.is_zero()) return {};
  auto [quot, rem] = divrem(p.to_poly(), q.to_poly());
  if (!rem.is_zero()) throw std::domain_error("inexact Laurent polynomial division");
  return LaurentPolynomial::from_poly(quot, p.lowest() - q.lowest());
}

/// num/den with gcd cancelled, den monic with lowest exponent 0.
struct RationalFunction {
  LaurentPolynomial num;
  LaurentPolynomial den = LaurentPolynomial(1);

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

inline RationalFunction reduce(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return {};
  const LaurentPolynomial g = gcd(num, den);
  LaurentPolynomial n = divide_exact(num, g);
  LaurentPolynomial d = divide_exact(den, g);
  const int shift = -d.lowest();
  n = n.shifted(shift);
  d = d.shifted(shift);
  const LaurentPolynomial inv(d.leading_coeff().inverse());
  return {n * inv, d * inv};
}

struct OrderAtOne {
  int order = 0;
  LaurentPolynomial cofactor;  // p / (t-1)^order
  NFElement cofactor_value;    // cofactor(1), nonzero
};

/// Multiplicity of t = 1 as a root, by repeated synthetic division.
inline OrderAtOne order_at_one(const LaurentPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("order_at_one of the zero polynomial");
  NFPoly q = p.to_poly();
  int order = 0;
  while (true) {
    auto [quot, rem] = synthetic_divide(q, NFElement(1));
    if (!is_zero(rem)) return {order, LaurentPolynomial::from_poly(q, p.lowest()), rem};
    q = std::move(quot);
    ++order;
  }
}

namespace detail {

inline Matrix<NFElement> evaluate_at(const Matrix<NFPoly>& m, const NFElement& x) {
  return m.map([&](const NFPoly& p) { return p.eval(x); });
}

}  // namespace detail

/// Exact determinant. Each row is multiplied by a power of t so that its
/// entries are ordinary polynomials; the determinant of that matrix has degree
/// at most D = sum of the row degrees and is recovered by interpolating exact
/// fraction-free eliminations at t = 1, ..., D+1. One extra point verifies the
/// interpolant before the row shifts are undone.
inline LaurentPolynomial determinant(const PolyMatrix& m, bool parallel = false) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return LaurentPolynomial(1);

  Matrix<NFPoly> shifted(n, n);
  long shift = 0;
  int bound = 0;
  for (int i = 0; i < n; ++i) {
    std::optional<int> low;
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) low = low ? std::min(*low, m(i, j).lowest()) : m(i, j).lowest();
    if (!low) return {};
    shift += *low;
    int deg = 0;
    for (int j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      shifted(i, j) = m(i, j).to_poly(*low);
      deg = std::max(deg, shifted(i, j).degree());
    }
    bound += deg;
  }

  const int points = bound + 1;
  std::vector<NFElement> values(static_cast<std::size_t>(points) + 1);
  auto eval_det = [&](int x) { return bareiss_determinant(detail::evaluate_at(shifted, NFElement(x))); };
  if (parallel && points > 4) {
    std::vector<std::future<NFElement>> futures;
    for (int k = 0; k <= points; ++k) futures.push_back(std::async(std::launch::async, eval_det, k + 1));
    for (int k = 0; k <= points; ++k) values[static_cast<std::size_t>(k)] = futures[static_cast<std::size_t>(k)].get();
  } else {
    for (int k = 0; k <= points; ++k) values[static_cast<std::size_t>(k)] = eval_det(k + 1);
  }

  // Newton divided differences on the nodes x_k = k + 1, k < points.
  std::vector<NFElement> c(values.begin(), values.begin() + points);
  for (int j = 1; j < points; ++j)
    for (int i = points - 1; i >= j; --i)
      c[static_cast<std::size_t>(i)] =
          (c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i - 1)]) * NFElement(mpq_class(1, j));
  NFPoly result(c.back());
  for (int i = points - 2; i >= 0; --i)
    result = result * NFPoly(std::vector<NFElement>{NFElement(-(i + 1)), NFElement(1)}) + NFPoly(c[static_cast<std::size_t>(i)]);

  const NFElement check_point(points + 1);
  if (!(synthetic_divide(result, check_point).second == values.back()))
    throw Error("determinant", "interpolated determinant failed verification at an extra point");
  if (result.degree() > bound) throw Error("determinant", "interpolated determinant exceeds its degree bound");
  return LaurentPolynomial::from_poly(result, static_cast<int>(shift));
}

/// "c_k*t^k + ... " in descending exponents; coefficients are bracketed
/// rational vectors padded to `width` entries. The zero polynomial prints "0".
inline std::string to_string(const LaurentPolynomial& p, int width = 1) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    std::vector<mpq_class> v = it->second.coefficients();
    if (static_cast<int>(v.size()) < width) v.resize(static_cast<std::size_t>(width), mpq_class(0));
    s += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += v[i].get_str();
    }
    s += "]*t^" + std::to_string(it->first);
  }
  return s;
}

inline std::string to_string(const LaurentPolynomial& p, const FieldPtr& field) {
  return to_string(p, field ? field->degree() : 1);
}

/// Inverse of to_string.
inline LaurentPolynomial parse_laurent(std::string_view text, const FieldPtr& field) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "0") return {};
  LaurentPolynomial p;
  std::optional<int> prev;
  while (!s.empty()) {
    auto close = s.find(']');
    if (close == std::string_view::npos || s.substr(close + 1, 3) != "*t^")
      throw std::invalid_argument("malformed Laurent term in '" + std::string(text) + "'");
    NFElement c = parse_nf_element(s.substr(0, close + 1), field);
    s.remove_prefix(close + 4);
    auto sep = s.find(" + ");
    std::string exp_text(s.substr(0, sep));
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(exp_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (exp_text.empty() || used != exp_text.size())
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    if (prev && k >= *prev) throw std::invalid_argument("exponents must be strictly descending");
    if (is_zero(c)) throw std::invalid_argument("zero coefficient in Laurent polynomial");
    prev = k;
    p.add_term(k, c);
    if (sep == std::string_view::npos) break;
    s.remove_prefix(sep + 3);
    if (s.empty()) throw std::invalid_argument("trailing '+' in Laurent polynomial");
  }
  return p;
}

}  // namespace twalex
