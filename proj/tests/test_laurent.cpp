#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace twalex;
using twalex::testing::cofactor_determinant;
using twalex::testing::eisenstein_field;
using twalex::testing::poly_from;
using twalex::testing::Random;
using twalex::testing::to_laurent;

namespace {

using QPoly = Poly<mpq_class>;

QPoly qpoly(std::initializer_list<long> c) {
  std::vector<mpq_class> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

const LaurentPolynomial t = LaurentPolynomial::t();

}  // namespace

TEST(Poly, Arithmetic) {
  const QPoly p = qpoly({1, 1}), q = qpoly({-1, 1});
  EXPECT_EQ(p * q, qpoly({-1, 0, 1}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(qpoly({0, 0, 0}).degree(), -1);
  EXPECT_EQ(qpoly({1, 2, 3}).eval(mpq_class(2)), mpq_class(17));
  EXPECT_EQ(qpoly({1, 2, 3}).derivative(), qpoly({2, 6}));
  auto [quot, rem] = divrem(qpoly({-1, 0, 1}), qpoly({1, 1}));
  EXPECT_EQ(quot, qpoly({-1, 1}));
  EXPECT_TRUE(rem.is_zero());
}

TEST(Poly, GcdAndBezout) {
  const QPoly a = qpoly({-1, 0, 1}) * qpoly({2, 1});  // (t^2-1)(t+2)
  const QPoly b = qpoly({1, 2, 1});                   // (t+1)^2
  EXPECT_EQ(gcd(a, b), qpoly({1, 1}));
  const auto e = ext_gcd(a, b);
  EXPECT_EQ(e.s * a + e.t * b, e.g);
  EXPECT_EQ(e.g, qpoly({1, 1}));
}

TEST(Laurent, ArithmeticAndShifts) {
  const LaurentPolynomial p = to_laurent({{-1, 1}, {1, 2}});
  EXPECT_EQ(p.lowest(), -1);
  EXPECT_EQ(p.highest(), 1);
  EXPECT_EQ(p * t, to_laurent({{0, 1}, {2, 2}}));
  EXPECT_EQ(p.shifted(3), to_laurent({{2, 1}, {4, 2}}));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.coeff(0), NFElement(0));
  EXPECT_EQ(-(-p), p);
}

TEST(Laurent, Evaluate) {
  const auto f = eisenstein_field();
  EXPECT_EQ(evaluate(poly_from({1, -4, 1}), NFElement(1)), NFElement(-2));
  EXPECT_EQ(evaluate(to_laurent({{-2, 1}, {-1, -4}, {0, 1}}), NFElement(1)), NFElement(-2));
  EXPECT_EQ(evaluate(to_laurent({{-1, 1}}), NFElement(2)), NFElement(mpq_class(1, 2)));
  EXPECT_EQ(evaluate(poly_from({1, -9, 44, -9, 1}), NFElement(1)), NFElement(28));
  const NFElement u = NFElement::generator(f);
  EXPECT_TRUE(is_zero(evaluate(poly_from({1, 1, 1}), u)));
  EXPECT_THROW(evaluate(t, NFElement(0)), std::domain_error);
}

TEST(Laurent, SyntheticDivision) {
  auto [quot, rem] = synthetic_divide(poly_from({1, -4, 1}).to_poly(), NFElement(1));
  EXPECT_EQ(rem, NFElement(-2));
  EXPECT_EQ(LaurentPolynomial::from_poly(quot), poly_from({-3, 1}));
}

TEST(Laurent, OrderAtOne) {
  const OrderAtOne a = order_at_one(poly_from({1, -4, 1}));
  EXPECT_EQ(a.order, 0);
  EXPECT_EQ(a.cofactor_value, NFElement(-2));

  const LaurentPolynomial d3 = (t - LaurentPolynomial(1)) * poly_from({1, -5, 1});
  const OrderAtOne b = order_at_one(d3);
  EXPECT_EQ(b.order, 1);
  EXPECT_EQ(b.cofactor, poly_from({1, -5, 1}));
  EXPECT_EQ(b.cofactor_value, NFElement(-3));

  const LaurentPolynomial cube = (t - LaurentPolynomial(1)) * (t - LaurentPolynomial(1)) * (t - LaurentPolynomial(1));
  const OrderAtOne c = order_at_one(cube.shifted(-2));
  EXPECT_EQ(c.order, 3);
  EXPECT_EQ(c.cofactor_value, NFElement(1));
  EXPECT_THROW(order_at_one(LaurentPolynomial()), std::domain_error);
}

TEST(Laurent, GcdAndReduce) {
  const LaurentPolynomial one(1);
  const LaurentPolynomial p = (t - one) * (t - one) * poly_from({1, -4, 1});
  const LaurentPolynomial q = (t - one) * (t - one);
  EXPECT_EQ(gcd(p.shifted(-2), q), q);
  const RationalFunction r = reduce(p.shifted(-2), q);
  EXPECT_EQ(r.num, poly_from({1, -4, 1}).shifted(-2));
  EXPECT_EQ(r.den, one);

  const RationalFunction s = reduce(poly_from({1, -3, 1}), (t - one).shifted(4) * LaurentPolynomial(NFElement(3)));
  EXPECT_EQ(s.den, t - one);
  EXPECT_EQ(s.num, poly_from({1, -3, 1}).shifted(-4) * LaurentPolynomial(NFElement(mpq_class(1, 3))));
  EXPECT_THROW(reduce(one, LaurentPolynomial()), std::domain_error);
  EXPECT_EQ(reduce(LaurentPolynomial(), q), RationalFunction{});
}

TEST(Laurent, ReduceIsCanonical) {
  Random rng(53);
  const auto f = eisenstein_field();
  for (int i = 0; i < 40; ++i) {
    const LaurentPolynomial a = rng.laurent(f, -2, 3), b = rng.laurent(f, -1, 2), c = rng.laurent(f, 0, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const RationalFunction r1 = reduce(a, b);
    const RationalFunction r2 = reduce(a * c, b * c);
    EXPECT_EQ(r1, r2);
    EXPECT_EQ(r1.den.lowest(), 0);
    EXPECT_EQ(r1.den.leading_coeff(), NFElement(1));
    EXPECT_EQ(gcd(r1.num, r1.den), LaurentPolynomial(1));
    EXPECT_EQ(r1.num * b, a * r1.den);
  }
}

TEST(Determinant, SmallExamples) {
  const LaurentPolynomial one(1), zero;
  EXPECT_EQ(determinant(PolyMatrix{{t, one}, {zero, t}}), t * t);
  EXPECT_EQ(determinant(PolyMatrix(0, 0)), one);
  EXPECT_TRUE(determinant(PolyMatrix{{t, one}, {zero, zero}}).is_zero());
  EXPECT_EQ(determinant(PolyMatrix{{t.shifted(-3)}}), t.shifted(-3));
  EXPECT_THROW(determinant(PolyMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, TwoDimensionalDenominator) {
  // det(tB - I) with B unipotent upper triangular.
  const auto f = eisenstein_field();
  const NFElement u = NFElement::generator(f);
  const LaurentPolynomial one(1);
  const PolyMatrix m{{t - one, t * LaurentPolynomial(u)}, {LaurentPolynomial(), t - one}};
  EXPECT_EQ(determinant(m), (t - one) * (t - one));
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  Random rng(59);
  const auto f = eisenstein_field();
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const int n = rng.uniform(1, 5);
    PolyMatrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = rng.laurent(f, -2, 2);
    const bool parallel = i % 2 == 0;
    EXPECT_EQ(determinant(m, parallel), cofactor_determinant(m)) << "n = " << n;
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

TEST(Determinant, AlternatingAndMultiplicative) {
  Random rng(61);
  const auto f = eisenstein_field();
  for (int i = 0; i < 15; ++i) {
    const int n = rng.uniform(2, 4);
    PolyMatrix a(n, n), b(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        a(r, c) = rng.laurent(f, -1, 1);
        b(r, c) = rng.laurent(f, 0, 1);
      }
    PolyMatrix swapped = a;
    for (int c = 0; c < n; ++c) std::swap(swapped(0, c), swapped(1, c));
    EXPECT_EQ(determinant(swapped), -determinant(a));
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(LaurentText, PrintAndParse) {
  const auto f = eisenstein_field();
  const LaurentPolynomial p = poly_from({1, -4, 1});
  EXPECT_EQ(to_string(p, f), "[1,0]*t^2 + [-4,0]*t^1 + [1,0]*t^0");
  EXPECT_EQ(to_string(LaurentPolynomial(), f), "0");
  EXPECT_EQ(to_string(to_laurent({{-1, 2}}), 1), "[2]*t^-1");
  EXPECT_EQ(parse_laurent("[1,0]*t^2 + [-4,0]*t^1 + [1,0]*t^0", f), p);
  EXPECT_THROW(parse_laurent("[1]*t^0 + [1]*t^1", f), std::invalid_argument);
  EXPECT_THROW(parse_laurent("[1]*x^0", f), std::invalid_argument);
  EXPECT_THROW(parse_laurent("[0]*t^0", f), std::invalid_argument);

  Random rng(67);
  for (int i = 0; i < 30; ++i) {
    const LaurentPolynomial q = rng.laurent(f, -3, 3);
    EXPECT_EQ(parse_laurent(to_string(q, f), f), q);
  }
}
