#pragma once

// Test-only oracles and random generators. Nothing here calls the code path
// it is used to check.

#include <map>
#include <ostream>
#include <memory>
#include <random>
#include <vector>

#include "twalex/twalex.hpp"

namespace twalex {

// GoogleTest value printers.
inline void PrintTo(const NFElement& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const LaurentPolynomial& p, std::ostream* os) { *os << to_string(p, 1); }
inline void PrintTo(const RationalFunction& r, std::ostream* os) {
  *os << "(" << to_string(r.num, 1) << ") / (" << to_string(r.den, 1) << ")";
}

}  // namespace twalex

namespace twalex::testing {

inline FieldPtr eisenstein_field() {
  return std::make_shared<const NumberField>(std::vector<mpz_class>{1, 1, 1},
                                             std::pair<std::string, std::string>{"-0.5", "0.87"});
}

inline FieldPtr rational_field() { return std::make_shared<const NumberField>(std::vector<mpz_class>{0, 1}); }

/// The holonomy representation of the figure-eight knot group.
inline RepSL2 figure_eight_rep(const FieldPtr& f) {
  const NFElement u = NFElement::generator(f);
  return RepSL2({Matrix2{{NFElement(1), NFElement(1)}, {NFElement(0), NFElement(1)}},
                 Matrix2{{NFElement(1), NFElement(0)}, {-u, NFElement(1)}}});
}

inline Presentation figure_eight_presentation() { return parse_presentation("gens: a b\nrel: aBAba = baBAb\n"); }

inline std::string job_path(const std::string& name) { return std::string(TWALEX_SOURCE_DIR) + "/jobs/" + name; }

/// Integer-coefficient Laurent polynomial as exponent -> coefficient.
using IntLaurent = std::map<int, long>;

inline LaurentPolynomial to_laurent(const IntLaurent& p) {
  LaurentPolynomial out;
  for (const auto& [k, c] : p) out.add_term(k, NFElement(c));
  return out;
}

/// Builds sum c_i t^i from a constant-first coefficient list.
inline LaurentPolynomial poly_from(std::initializer_list<long> coeffs) {
  LaurentPolynomial p;
  int k = 0;
  for (long c : coeffs) p.add_term(k++, NFElement(c));
  return p;
}

/// Abelianized Fox derivative d(w)/d(x_g) read directly off the letters:
/// a positive letter contributes +t^{alpha(prefix)}, a negative one
/// -t^{alpha(prefix) - alpha(g)}.
inline IntLaurent abelian_fox(const std::vector<Letter>& w, int g, const std::vector<int>& alpha) {
  IntLaurent out;
  int e = 0;
  for (const Letter& l : w) {
    const int a = alpha[static_cast<std::size_t>(l.generator)];
    if (l.generator == g) {
      if (l.sign > 0) out[e] += 1;
      else out[e - a] -= 1;
    }
    e += l.sign * a;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Laplace expansion along the first row.
template <class T>
T cofactor_determinant(const Matrix<T>& m) {
  const int n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T det(0);
  for (int j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    T term = m(0, j) * cofactor_determinant(minor);
    det = j % 2 == 0 ? det + term : det - term;
  }
  return det;
}

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  mpq_class rational(int range = 5) {
    mpq_class q(uniform(-range, range), uniform(1, 3));
    q.canonicalize();
    return q;
  }

  NFElement element(const FieldPtr& f, int range = 5) {
    std::vector<mpq_class> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(rational(range));
    return NFElement(f, c);
  }

  NFElement nonzero_element(const FieldPtr& f) {
    NFElement x;
    do x = element(f);
    while (is_zero(x));
    return x;
  }

  std::vector<Letter> raw_word(int generators, int max_len) {
    std::vector<Letter> w(static_cast<std::size_t>(uniform(0, max_len)));
    for (auto& l : w) l = {uniform(0, generators - 1), uniform(0, 1) ? 1 : -1};
    return w;
  }

  Word word(int generators, int max_len) { return Word(raw_word(generators, max_len)); }

  /// Product of elementary unipotent matrices: determinant exactly 1.
  Matrix2 sl2(const FieldPtr& f) {
    Matrix2 m = Matrix2::identity(2);
    for (int k = 0; k < 3; ++k) {
      m = m * Matrix2{{NFElement(1), element(f, 3)}, {NFElement(0), NFElement(1)}};
      m = m * Matrix2{{NFElement(1), NFElement(0)}, {element(f, 3), NFElement(1)}};
    }
    return m;
  }

  LaurentPolynomial laurent(const FieldPtr& f, int lo, int hi) {
    LaurentPolynomial p;
    for (int k = lo; k <= hi; ++k)
      if (uniform(0, 3)) p.add_term(k, element(f, 3));
    return p;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace twalex::testing
