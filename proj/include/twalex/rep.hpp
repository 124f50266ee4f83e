#pragma once

// SL(2) representations of finitely presented groups over a number field and
// the symmetric-power representations sigma_n : SL(2) -> SL(n).

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "twalex/error.hpp"
#include "twalex/group.hpp"
#include "twalex/matrix.hpp"
#include "twalex/number_field.hpp"

namespace twalex {

using Matrix2 = Matrix<NFElement>;
using MatrixN = Matrix<NFElement>;

inline NFElement det2(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Matrix2 inverse2(const Matrix2& m) {
  const NFElement inv_det = det2(m).inverse();
  return Matrix2{{m(1, 1) * inv_det, -m(0, 1) * inv_det}, {-m(1, 0) * inv_det, m(0, 0) * inv_det}};
}

/// Generator-indexed images in SL(2). Inverses are cached at construction.
class RepSL2 {
 public:
  RepSL2() = default;
  explicit RepSL2(std::vector<Matrix2> images) : images_(std::move(images)) {
    inverses_.reserve(images_.size());
    for (const auto& m : images_) {
      if (m.rows() != 2 || m.cols() != 2) throw Error("representation", "generator images must be 2x2");
      if (is_zero(det2(m))) throw Error("representation", "generator image is singular");
      inverses_.push_back(inverse2(m));
    }
  }

  int generator_count() const { return static_cast<int>(images_.size()); }
  const Matrix2& image(int g) const { return images_.at(static_cast<std::size_t>(g)); }
  const Matrix2& inverse_image(int g) const { return inverses_.at(static_cast<std::size_t>(g)); }
  const std::vector<Matrix2>& images() const { return images_; }

 private:
  std::vector<Matrix2> images_;
  std::vector<Matrix2> inverses_;
};

/// Left-to-right product of generator images; the identity word maps to I.
inline Matrix2 evaluate_word(const RepSL2& rep, const Word& w) {
  Matrix2 acc = Matrix2::identity(2);
  for (const Letter& l : w.letters()) {
    if (l.generator < 0 || l.generator >= rep.generator_count())
      throw Error("representation", "unknown generator index " + std::to_string(l.generator));
    acc = acc * (l.sign > 0 ? rep.image(l.generator) : rep.inverse_image(l.generator));
  }
  return acc;
}

/// sigma_n(M) on homogeneous polynomials of degree n-1 in the basis
/// x^{n-1}, x^{n-2}y, ..., y^{n-1}, acting by (M.p)(v) = p(M^{-1} v).
/// With M^{-1} = [[a,b],[c,d]], column j holds the coordinates of
/// (ax+by)^{n-1-j} (cx+dy)^j.
inline MatrixN symmetric_power(const Matrix2& m, int n) {
  if (n < 1) throw std::invalid_argument("symmetric power dimension must be >= 1");
  const Matrix2 inv = inverse2(m);
  const NFElement &a = inv(0, 0), &b = inv(0, 1), &c = inv(1, 0), &d = inv(1, 1);

  auto powers = [n](const NFElement& x) {
    std::vector<NFElement> p{NFElement(1)};
    for (int e = 1; e < n; ++e) p.push_back(p.back() * x);
    return p;
  };
  const auto pa = powers(a), pb = powers(b), pc = powers(c), pd = powers(d);

  std::vector<std::vector<mpz_class>> binom(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto& row = binom[static_cast<std::size_t>(k)];
    row.resize(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) mpz_bin_uiui(row[static_cast<std::size_t>(i)].get_mpz_t(), k, i);
  }
  auto at = [](const std::vector<NFElement>& v, int i) -> const NFElement& { return v[static_cast<std::size_t>(i)]; };

  MatrixN s(n, n);
  for (int j = 0; j < n; ++j) {
    const int p = n - 1 - j;  // power of (ax+by)
    const int q = j;          // power of (cx+dy)
    for (int i = 0; i <= p; ++i) {
      // coefficient of x^{p-i} y^i in (ax+by)^p
      NFElement left = NFElement(mpq_class(binom[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)])) *
                       at(pa, p - i) * at(pb, i);
      if (is_zero(left)) continue;
      for (int k = 0; k <= q; ++k) {
        NFElement right = NFElement(mpq_class(binom[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)])) *
                          at(pc, q - k) * at(pd, k);
        s(i + k, j) += left * right;
      }
    }
  }
  return s;
}

struct RelationDefect {
  int relation;        // index into Presentation::relations
  Matrix2 difference;  // evaluate(lhs) - evaluate(rhs), nonzero
};

/// Empty iff every relation holds exactly under rep.
inline std::vector<RelationDefect> check_relations(const RepSL2& rep, const Presentation& pres) {
  std::vector<RelationDefect> out;
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const auto& r = pres.relations[i];
    Matrix2 diff = evaluate_word(rep, r.lhs) - evaluate_word(rep, r.rhs);
    if (!diff.is_zero_matrix()) out.push_back({static_cast<int>(i), std::move(diff)});
  }
  return out;
}

/// Generators whose image does not have determinant exactly 1.
inline std::vector<int> non_unimodular_generators(const RepSL2& rep) {
  std::vector<int> out;
  for (int g = 0; g < rep.generator_count(); ++g)
    if (!(det2(rep.image(g)) == NFElement(1))) out.push_back(g);
  return out;
}

}  // namespace twalex
