#pragma once

// Wada's twisted Alexander invariant: the Fox matrix of a deficiency-one
// presentation pushed through t^alpha (x) sigma_n(rho), one block column
// deleted, divided by det Phi(x_j - 1).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twalex/error.hpp"
#include "twalex/group.hpp"
#include "twalex/laurent.hpp"
#include "twalex/rep.hpp"

namespace twalex {

struct TwistConfig {
  Presentation presentation;
  RepSL2 rep;
  int n = 2;
  std::optional<int> column;  // deleted generator column; nullopt picks automatically
  bool parallel = false;      // run determinant evaluation points concurrently
};

/// Phi(sum c_w w) = sum c_w t^{alpha(w)} sigma_n(rho(w)), an n x n matrix.
inline PolyMatrix phi(const GroupRingElement& e, const TwistConfig& cfg) {
  const int n = cfg.n;
  PolyMatrix out(n, n);
  for (const auto& [w, c] : e.terms()) {
    const MatrixN s = symmetric_power(evaluate_word(cfg.rep, w), n);
    const int exponent = static_cast<int>(abelianize(w, cfg.presentation.alpha));
    const NFElement coeff{static_cast<long>(c)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j).add_term(exponent, coeff * s(i, j));
  }
  return out;
}

/// Block (i, j) = Phi(d r_i / d x_j); size n*#relators x n*#generators.
inline PolyMatrix wada_matrix(const TwistConfig& cfg) {
  const auto relators = cfg.presentation.relators();
  const int g = cfg.presentation.generator_count();
  const int n = cfg.n;
  PolyMatrix m(n * static_cast<int>(relators.size()), n * g);
  for (std::size_t i = 0; i < relators.size(); ++i)
    for (int j = 0; j < g; ++j)
      m.set_block(n * static_cast<int>(i), n * j, phi(fox_derivative(relators[i], j), cfg));
  return m;
}

/// Phi(x_j - 1)
inline PolyMatrix generator_denominator(int j, const TwistConfig& cfg) {
  return phi(GroupRingElement(Word::generator(j)) - GroupRingElement::one(), cfg);
}

/// The invariant in unit-normalized form. The raw reduced quotient equals
/// unit_sign * t^unit_exponent * value.
struct TwistedAlexander {
  RationalFunction value;
  int n = 0;
  bool unit_normalized = true;
  int unit_sign = 1;
  int unit_exponent = 0;
  int column = 0;
};

/// Sign of the first nonzero rational coordinate of c.
inline int leading_sign(const NFElement& c) {
  for (const auto& q : c.coefficients())
    if (sgn(q) != 0) return sgn(q);
  return 0;
}

/// Shifts the numerator to lowest exponent 0 and fixes the sign of its
/// lowest-degree coefficient to be positive. The denominator is already in
/// normal form after reduce().
inline TwistedAlexander normalize(const RationalFunction& raw, int n, int column) {
  TwistedAlexander out;
  out.n = n;
  out.column = column;
  out.value = raw;
  if (raw.num.is_zero()) return out;
  out.unit_exponent = raw.num.lowest();
  out.unit_sign = leading_sign(raw.num.lowest_coeff());
  out.value.num = raw.num.shifted(-out.unit_exponent);
  if (out.unit_sign < 0) out.value.num = -out.value.num;
  return out;
}

/// Equality up to a unit +-t^k.
inline bool equivalent_up_to_unit(const TwistedAlexander& a, const TwistedAlexander& b) {
  if (!(a.value.den == b.value.den)) return false;
  return a.value.num == b.value.num || a.value.num == -b.value.num;
}

inline RationalFunction invariant_for_column(const PolyMatrix& wada, int j, const TwistConfig& cfg,
                                             const LaurentPolynomial& den) {
  const LaurentPolynomial num = determinant(wada.without_columns(j * cfg.n, cfg.n), cfg.parallel);
  return reduce(num, den);
}

/// det M_j / det Phi(x_j - 1) for the first admissible j (or the requested one).
inline TwistedAlexander twisted_alexander(const TwistConfig& cfg) {
  if (cfg.n < 1) throw Error("invariant", "dimension n must be >= 1");
  const int g = cfg.presentation.generator_count();
  if (static_cast<int>(cfg.presentation.relations.size()) + 1 != g)
    throw Error("invariant", "presentation must have deficiency one");
  std::vector<int> candidates;
  if (cfg.column) {
    if (*cfg.column < 0 || *cfg.column >= g) throw Error("invariant", "column generator out of range");
    candidates.push_back(*cfg.column);
  } else {
    for (int j = 0; j < g; ++j) candidates.push_back(j);
  }
  const PolyMatrix wada = wada_matrix(cfg);
  for (int j : candidates) {
    const LaurentPolynomial den = determinant(generator_denominator(j, cfg), cfg.parallel);
    if (den.is_zero()) continue;
    return normalize(invariant_for_column(wada, j, cfg, den), cfg.n, j);
  }
  throw Error("no admissible column",
              "det Phi(x_j - 1) vanishes identically for every candidate column (n = " +
                  std::to_string(cfg.n) + ")");
}

/// The invariant computed from every admissible column; inadmissible ones are nullopt.
inline std::vector<std::optional<TwistedAlexander>> twisted_alexander_all_columns(const TwistConfig& cfg) {
  const PolyMatrix wada = wada_matrix(cfg);
  std::vector<std::optional<TwistedAlexander>> out;
  for (int j = 0; j < cfg.presentation.generator_count(); ++j) {
    const LaurentPolynomial den = determinant(generator_denominator(j, cfg), cfg.parallel);
    if (den.is_zero()) out.emplace_back();
    else out.emplace_back(normalize(invariant_for_column(wada, j, cfg, den), cfg.n, j));
  }
  return out;
}

/// Delta(1) for even n and n = 1; for odd n >= 3 the simple zero at t = 1 is
/// divided out first, i.e. (Delta / (t - 1))(1).
inline NFElement value_at_one(const TwistedAlexander& delta) {
  const NFElement den_at_one = evaluate(delta.value.den, NFElement(1));
  if (is_zero(den_at_one))
    throw Error("invariant", "reduced denominator vanishes at t = 1 (n = " + std::to_string(delta.n) + ")");
  if (delta.n % 2 == 1 && delta.n >= 3) {
    if (delta.value.num.is_zero())
      throw Error("simple-zero violation", "invariant vanishes identically (n = " + std::to_string(delta.n) + ")");
    const OrderAtOne oa = order_at_one(delta.value.num);
    if (oa.order != 1)
      throw Error("simple-zero violation", "expected a simple zero at t = 1 for n = " + std::to_string(delta.n) +
                                               ", found order " + std::to_string(oa.order));
    return oa.cofactor_value / den_at_one;
  }
  return evaluate(delta.value.num, NFElement(1)) / den_at_one;
}

}  // namespace twalex
