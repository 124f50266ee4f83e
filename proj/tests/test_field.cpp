#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace twalex;
using twalex::testing::eisenstein_field;
using twalex::testing::Random;
using twalex::testing::rational_field;

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3"), mpq_class(3));
  EXPECT_EQ(parse_rational("-6/4"), mpq_class(-3, 2));
  EXPECT_EQ(parse_rational("+1/2"), mpq_class(1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(NumberField, ReductionByMinimalPolynomial) {
  const auto f = eisenstein_field();
  const NFElement u = NFElement::generator(f);
  EXPECT_EQ(u * u, NFElement(f, {-1, -1}));
  EXPECT_EQ(u * (NFElement(-1) - u), NFElement(1));
  EXPECT_EQ(u.inverse(), NFElement(f, {-1, -1}));
  EXPECT_EQ(u + NFElement(0), u);
}

TEST(NumberField, ExactZeroTest) {
  const auto f = eisenstein_field();
  const NFElement u = NFElement::generator(f);
  EXPECT_TRUE(is_zero(NFElement(f, {0, 0})));
  EXPECT_FALSE(is_zero(u));
  EXPECT_TRUE(is_zero(u * u + u + NFElement(1)));
}

TEST(NumberField, DivisionByZeroThrows) {
  const auto f = eisenstein_field();
  EXPECT_THROW(NFElement::generator(f) / NFElement(f, {}), std::domain_error);
  EXPECT_THROW(NFElement(0).inverse(), std::domain_error);
}

TEST(NumberField, ReducibleModulusDetectedOnInversion) {
  // x^2 - 1 = (x - 1)(x + 1): x - 1 is a zero divisor.
  const auto f = std::make_shared<const NumberField>(std::vector<mpz_class>{-1, 0, 1},
                                                     std::pair<std::string, std::string>{"1.1", "0"});
  EXPECT_THROW((NFElement::generator(f) - NFElement(1)).inverse(), std::domain_error);
}

TEST(NumberField, FieldAxiomsOnRandomElements) {
  Random rng(17);
  for (const auto& f : {eisenstein_field(), rational_field()}) {
    for (int i = 0; i < 60; ++i) {
      const NFElement x = rng.element(f), y = rng.element(f), z = rng.element(f);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * y, y * x);
      EXPECT_TRUE(is_zero(x - x));
      if (!is_zero(x)) EXPECT_EQ(x * x.inverse(), NFElement(1));
    }
  }
}

TEST(NumberField, Validation) {
  using Hint = std::pair<std::string, std::string>;
  EXPECT_THROW(NumberField({1}), Error);
  EXPECT_THROW(NumberField({1, 2}), Error);                // not monic
  EXPECT_THROW(NumberField({1, 1, 1}), Error);             // no hint
  EXPECT_THROW(NumberField({1, 2, 1}, Hint{"-1", "0"}), Error);  // (x+1)^2 not squarefree
  // Equidistant from both roots: Newton does not settle on a single root.
  EXPECT_THROW(NumberField({1, 1, 1}, Hint{"-0.5", "0"}), Error);
  EXPECT_THROW(NumberField({1, 1, 1}, Hint{"abc", "0"}), Error);
  EXPECT_NO_THROW(NumberField({1, 1, 1}, Hint{"-0.5", "-0.87"}));
}

TEST(Embed, GeneratorOfEisensteinField) {
  const auto f = eisenstein_field();
  const BigComplex z = NFElement::generator(f).embed(256);
  const BigFloat half_sqrt3 = sqrt(BigFloat(3L, 256)) / BigFloat(2L, 256);
  EXPECT_TRUE(abs(z.re - BigFloat(mpq_class(-1, 2), 256)) < ldexp(BigFloat(1L, 256), -250));
  EXPECT_TRUE(abs(z.im - half_sqrt3) < ldexp(BigFloat(1L, 256), -250));
  EXPECT_EQ(z.re.to_string(10), "-0.5");
  EXPECT_EQ(z.im.to_string(10), "0.8660254038");
}

TEST(Embed, RationalsAreExact) {
  for (mpfr_prec_t prec : {64, 128, 1024}) {
    const BigComplex z = NFElement(mpq_class(3, 2)).embed(prec);
    EXPECT_TRUE(z.re == BigFloat(mpq_class(3, 2), prec));
    EXPECT_TRUE(z.im.is_zero());
  }
}

TEST(Embed, MinimalPolynomialAnnihilatesRoot) {
  const auto f = eisenstein_field();
  for (mpfr_prec_t prec : {64, 256, 512}) {
    const BigComplex z = f->root(prec);
    const BigComplex one(BigFloat(1L, prec), BigFloat(prec));
    const BigComplex value = z * z + z + one;
    EXPECT_TRUE(abs(value) < ldexp(BigFloat(1L, prec), 1 - prec)) << prec;
  }
}

TEST(Embed, ConjugateHintSelectsConjugate) {
  const auto f = std::make_shared<const NumberField>(std::vector<mpz_class>{1, 1, 1},
                                                     std::pair<std::string, std::string>{"-0.5", "-0.87"});
  EXPECT_LT(NFElement::generator(f).embed().im.sign(), 0);
}

TEST(Embed, RingHomomorphismUpToPrecision) {
  Random rng(23);
  // A cubic field as well: x^3 - x - 1 with its real root.
  const auto cubic = std::make_shared<const NumberField>(std::vector<mpz_class>{-1, -1, 0, 1},
                                                         std::pair<std::string, std::string>{"1.3", "0"});
  for (const auto& f : {eisenstein_field(), cubic}) {
    for (mpfr_prec_t prec : {128, 256}) {
      for (int i = 0; i < 20; ++i) {
        const NFElement x = rng.element(f), y = rng.element(f);
        const BigComplex prod = x.embed(prec) * y.embed(prec);
        const BigFloat err = abs((x * y).embed(prec) - prod);
        const BigFloat tol = ldexp(BigFloat(1L, prec), 8 - prec) * (BigFloat(1L, prec) + abs(prod));
        EXPECT_TRUE(err < tol);
      }
    }
  }
}

TEST(Embed, DoublingPrecisionIsStable) {
  Random rng(29);
  const auto f = eisenstein_field();
  for (int i = 0; i < 20; ++i) {
    const NFElement x = rng.element(f);
    const BigComplex lo = x.embed(128), hi = x.embed(256);
    const BigFloat tol = ldexp(BigFloat(1L, 256), 8 - 128) * (BigFloat(1L, 256) + abs(hi));
    EXPECT_TRUE(abs(hi - lo) < tol);
  }
}

TEST(Embed, PrecisionFloor) { EXPECT_THROW(eisenstein_field()->root(32), Error); }

TEST(NFElement, ParseVector) {
  const auto f = eisenstein_field();
  EXPECT_EQ(parse_nf_element("[0,-1]", f), -NFElement::generator(f));
  EXPECT_EQ(parse_nf_element("[ 1/2 ]", f), NFElement(mpq_class(1, 2)));
  EXPECT_EQ(parse_nf_element("[1,2]", f).to_string(), "[1,2]");
  EXPECT_THROW(parse_nf_element("[1,2,3]", f), std::invalid_argument);
  EXPECT_THROW(parse_nf_element("1,2", f), std::invalid_argument);
}
