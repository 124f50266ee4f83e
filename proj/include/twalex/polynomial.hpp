#pragma once

// Dense univariate polynomials over an exact field F. F must be constructible
// from int and provide + - * / == and an ADL-visible is_zero().

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twalex {

inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }

namespace detail {
// Class scopes with an is_zero() member hide the free overloads; route through here.
template <class F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const F& constant) : c_{constant} { trim(); }  // NOLINT

  static Poly monomial(const F& c, int k) {
    std::vector<F> v(static_cast<std::size_t>(k) + 1, F(0));
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coefficients() const { return c_; }
  const F& operator[](std::size_t i) const { return c_[i]; }
  F coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : F(0); }
  const F& leading() const {
    assert(!c_.empty());
    return c_.back();
  }

  F eval(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<int>(i)));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    F inv = F(1) / c_.back();
    std::vector<F> v;
    v.reserve(c_.size());
    for (const F& c : c_) v.push_back(c * inv);
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
  return p.is_zero();
}

/// Euclidean division: a = q*b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<F> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<F>(), a};
  std::vector<F> quot(static_cast<std::size_t>(a.degree() - db) + 1, F(0));
  const F inv_lead = F(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const F& top = rem[static_cast<std::size_t>(k)];
    if (is_zero(top)) continue;
    F q = top * inv_lead;
    for (int i = 0; i <= db; ++i) {
      auto& r = rem[static_cast<std::size_t>(k - db + i)];
      r = r - q * b[static_cast<std::size_t>(i)];
    }
    quot[static_cast<std::size_t>(k - db)] = q;
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct ExtGcd {
  Poly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <class F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0(F(1)), s1, t0, t1(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    Poly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Poly<F> lead_inv(F(F(1) / r0.leading()));
  return {r0 * lead_inv, s0 * lead_inv, t0 * lead_inv};
}

}  // namespace twalex
