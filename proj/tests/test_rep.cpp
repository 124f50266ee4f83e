#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace twalex;
using twalex::testing::eisenstein_field;
using twalex::testing::figure_eight_presentation;
using twalex::testing::figure_eight_rep;
using twalex::testing::Random;

namespace {

NFElement q(long v) { return NFElement(v); }

MatrixN ints(std::initializer_list<std::initializer_list<long>> rows) {
  const int n = static_cast<int>(rows.size());
  MatrixN m(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (long v : r) m(i, j++) = q(v);
    ++i;
  }
  return m;
}

Word word(const std::string& s) {
  std::vector<Letter> out;
  for (char c : s) out.push_back({std::tolower(c) - 'a', std::islower(c) ? 1 : -1});
  return Word(out);
}

}  // namespace

TEST(SymmetricPower, MeridianAInLowDimensions) {
  const auto f = eisenstein_field();
  const RepSL2 rho = figure_eight_rep(f);
  const Matrix2& a = rho.image(0);
  EXPECT_EQ(symmetric_power(a, 1), ints({{1}}));
  EXPECT_EQ(symmetric_power(a, 2), ints({{1, 0}, {-1, 1}}));
  EXPECT_EQ(symmetric_power(a, 3), ints({{1, 0, 0}, {-2, 1, 0}, {1, -1, 1}}));
  EXPECT_EQ(symmetric_power(a, 4), ints({{1, 0, 0, 0}, {-3, 1, 0, 0}, {3, -2, 1, 0}, {-1, 1, -1, 1}}));
}

TEST(SymmetricPower, MeridianBInLowDimensions) {
  const auto f = eisenstein_field();
  const RepSL2 rho = figure_eight_rep(f);
  const NFElement u = NFElement::generator(f), one(1), zero(0), two(2), three(3);
  const Matrix2& b = rho.image(1);
  EXPECT_EQ(symmetric_power(b, 2), (MatrixN{{one, u}, {zero, one}}));
  EXPECT_EQ(symmetric_power(b, 3), (MatrixN{{one, u, u * u}, {zero, one, two * u}, {zero, zero, one}}));
  EXPECT_EQ(symmetric_power(b, 4), (MatrixN{{one, u, u * u, u * u * u},
                                            {zero, one, two * u, three * u * u},
                                            {zero, zero, one, three * u},
                                            {zero, zero, zero, one}}));
}

TEST(SymmetricPower, DimensionTwoIsInverseTranspose) {
  Random rng(41);
  const auto f = eisenstein_field();
  for (int i = 0; i < 20; ++i) {
    const Matrix2 m = rng.sl2(f);
    EXPECT_EQ(symmetric_power(m, 2), inverse2(m).transpose());
  }
}

TEST(SymmetricPower, HomomorphismWithUnitDeterminant) {
  Random rng(43);
  const auto f = eisenstein_field();
  for (int n = 1; n <= 8; ++n) {
    for (int i = 0; i < 4; ++i) {
      const Matrix2 x = rng.sl2(f), y = rng.sl2(f);
      const MatrixN sx = symmetric_power(x, n), sy = symmetric_power(y, n);
      EXPECT_EQ(symmetric_power(x * y, n), sx * sy) << "n = " << n;
      EXPECT_EQ(bareiss_determinant(sx), NFElement(1)) << "n = " << n;
      EXPECT_EQ(symmetric_power(inverse2(x), n) * sx, MatrixN::identity(n)) << "n = " << n;
      EXPECT_EQ(symmetric_power(Matrix2::identity(2), n), MatrixN::identity(n));
    }
  }
}

TEST(SymmetricPower, TraceIsGeometricSumOfEigenvalues) {
  // Diagonal diag(l, 1/l) acts with eigenvalues l^{n-1}, l^{n-3}, ..., l^{1-n}.
  const auto f = eisenstein_field();
  const NFElement l = NFElement(2) + NFElement::generator(f);
  const Matrix2 d{{l, NFElement(0)}, {NFElement(0), l.inverse()}};
  Random rng(47);
  for (int n = 2; n <= 8; ++n) {
    const Matrix2 p = rng.sl2(f);
    const MatrixN s = symmetric_power(p * d * inverse2(p), n);
    NFElement trace(0), expected(0);
    for (int i = 0; i < n; ++i) trace += s(i, i);
    NFElement power = NFElement(1);
    for (int k = 0; k < n - 1; ++k) power *= l;
    for (int k = 0; k < n; ++k) {
      expected += power;
      power = power * l.inverse() * l.inverse();
    }
    EXPECT_EQ(trace, expected) << "n = " << n;
  }
}

TEST(SymmetricPower, RejectsZeroDimension) {
  EXPECT_THROW(symmetric_power(Matrix2::identity(2), 0), std::invalid_argument);
}

TEST(Rep, EvaluateWord) {
  const auto f = eisenstein_field();
  const RepSL2 rho = figure_eight_rep(f);
  const NFElement u = NFElement::generator(f);
  EXPECT_EQ(evaluate_word(rho, word("ab")), (Matrix2{{NFElement(1) - u, NFElement(1)}, {-u, NFElement(1)}}));
  EXPECT_EQ(evaluate_word(rho, Word{}), Matrix2::identity(2));
  EXPECT_EQ(evaluate_word(rho, word("aA")), Matrix2::identity(2));
  EXPECT_EQ(evaluate_word(rho, word("A")), inverse2(rho.image(0)));
  EXPECT_THROW(evaluate_word(rho, word("c")), Error);
}

TEST(Rep, FigureEightRelationHolds) {
  const auto f = eisenstein_field();
  const Presentation p = figure_eight_presentation();
  EXPECT_TRUE(check_relations(figure_eight_rep(f), p).empty());
  EXPECT_TRUE(non_unimodular_generators(figure_eight_rep(f)).empty());
}

TEST(Rep, WrongParameterBreaksRelation) {
  const auto f = eisenstein_field();
  const RepSL2 bad({Matrix2{{q(1), q(1)}, {q(0), q(1)}}, Matrix2{{q(1), q(0)}, {q(-1), q(1)}}});
  const auto defects = check_relations(bad, figure_eight_presentation());
  ASSERT_EQ(defects.size(), 1u);
  EXPECT_EQ(defects[0].relation, 0);
  EXPECT_FALSE(defects[0].difference.is_zero_matrix());
}

TEST(Rep, NoRelationsNothingToCheck) {
  const RepSL2 rho({Matrix2{{q(1), q(1)}, {q(0), q(1)}}});
  EXPECT_TRUE(check_relations(rho, parse_presentation("gens: a\n")).empty());
}

TEST(Rep, DeterminantCheck) {
  const RepSL2 rho({Matrix2{{q(2), q(0)}, {q(0), q(1)}}, Matrix2::identity(2)});
  EXPECT_EQ(non_unimodular_generators(rho), std::vector<int>{0});
}
