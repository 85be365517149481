#include <gtest/gtest.h>

#include <random>

#include "qgraph/scalar.hpp"

using namespace qgraph;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int span = 3, int maxc = 5) {
  std::uniform_int_distribution<int> len(0, 4), ex(-span, span), co(-maxc, maxc);
  LaurentPoly p;
  int n = len(rng);
  for (int k = 0; k < n; ++k) {
    mpq_class c(co(rng), 1 + (k % 2));
    c.canonicalize();
    p += LaurentPoly::monomial(c, ex(rng));
  }
  return p;
}

RatFunc random_rat(std::mt19937& rng) {
  LaurentPoly d = random_poly(rng, 2, 3);
  if (d.is_zero()) d = LaurentPoly(1);
  return RatFunc(random_poly(rng), d);
}

}  // namespace

TEST(LaurentPoly, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!(a * b).is_zero()) {
      EXPECT_NE((a * b).lead(), 0);
      EXPECT_NE((a * b).trail(), 0);
    }
  }
}

TEST(LaurentPoly, QuantumIntegers) {
  EXPECT_EQ(LaurentPoly::qint(0), LaurentPoly());
  EXPECT_EQ(LaurentPoly::qint(1), LaurentPoly(1));
  EXPECT_EQ(LaurentPoly::qint(2), LaurentPoly::q(1) + LaurentPoly::q(-1));
  EXPECT_EQ(LaurentPoly::qint(-3), -LaurentPoly::qint(3));
  // [n](q - q^{-1}) = q^n - q^{-n}
  for (int n = 1; n < 7; ++n)
    EXPECT_EQ(LaurentPoly::qint(n) * (LaurentPoly::q(1) - LaurentPoly::q(-1)), LaurentPoly::q(n) - LaurentPoly::q(-n));
}

TEST(RatFunc, CancellationIsStructural) {
  RatFunc f(LaurentPoly::q(2) - LaurentPoly(1), LaurentPoly::q(1) - LaurentPoly(1));
  EXPECT_EQ(f, RatFunc(LaurentPoly::q(1) + LaurentPoly(1)));
  EXPECT_TRUE(f.is_laurent());
  RatFunc g(LaurentPoly::q(3) - LaurentPoly::q(-3), LaurentPoly::q(3) - LaurentPoly::q(-3));
  EXPECT_EQ(g, RatFunc(1));
  RatFunc h(LaurentPoly(2), LaurentPoly::v(3) * 4 + LaurentPoly::v(5) * 6);
  EXPECT_EQ(h.den().low(), 0);
  EXPECT_EQ(h.den().trail(), 1);
}

TEST(RatFunc, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    RatFunc a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), RatFunc(1));
    }
    EXPECT_EQ(a - a, RatFunc());
  }
}

TEST(RatFunc, TextRoundTrip) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    RatFunc a = random_rat(rng);
    EXPECT_EQ(RatFunc::parse(a.str()), a) << a.str();
  }
  EXPECT_EQ(RatFunc::parse("(1*v^2 + -1*v^-2)"), RatFunc::q(1) - RatFunc::q(-1));
  EXPECT_EQ(RatFunc::parse("v^2 - v^-2"), RatFunc::q(1) - RatFunc::q(-1));
  EXPECT_THROW(RatFunc::parse("(1*w^2)"), ParseError);
}

TEST(Cyclotomic, ModulusComputedByDivision) {
  // Phi_12 = x^4 - x^2 + 1 and Phi_20 = x^8 - x^6 + x^4 - x^2 + 1.
  EXPECT_EQ(poly::cyclotomic(12), LaurentPoly::from_coeffs({1, 0, -1, 0, 1}));
  EXPECT_EQ(poly::cyclotomic(20), LaurentPoly::from_coeffs({1, 0, -1, 0, 1, 0, -1, 0, 1}));
  EXPECT_EQ(CycloField::get(3).degree(), 4);
  EXPECT_EQ(CycloField::get(5).degree(), 8);
  EXPECT_EQ(CycloField::get(7).degree(), 12);
}

class DesignatedConstants : public ::testing::TestWithParam<int> {};

TEST_P(DesignatedConstants, Relations) {
  const int l = GetParam();
  const CycloField& F = CycloField::get(l);
  Cyclotomic eps = F.epsilon();
  for (int k = 1; k < l; ++k) EXPECT_NE(eps.pow(k), Cyclotomic(1));
  EXPECT_EQ(eps.pow(l), Cyclotomic(1));
  EXPECT_EQ(F.sqrt_epsilon() * F.sqrt_epsilon(), eps);
  EXPECT_EQ(F.imag() * F.imag(), Cyclotomic(-1));
  Cyclotomic z = F.zeta();
  EXPECT_EQ(z * z, -eps);
  EXPECT_EQ(-(z * z + z.pow(-2)), eps + eps.inverse());
  EXPECT_EQ(z.pow(4 * l), Cyclotomic(1));
  EXPECT_NE(z.pow(2 * l), Cyclotomic(1));
}

INSTANTIATE_TEST_SUITE_P(Orders, DesignatedConstants, ::testing::Values(3, 5, 7));

TEST(Cyclotomic, FieldOps) {
  const CycloField& F = CycloField::get(5);
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> co(-4, 4), ex(0, 19);
  for (int trial = 0; trial < 60; ++trial) {
    Cyclotomic a = F.xpow(ex(rng)) * Cyclotomic(co(rng)) + F.xpow(ex(rng));
    Cyclotomic b = F.xpow(ex(rng)) * Cyclotomic(co(rng)) + Cyclotomic(mpq_class(co(rng)) / 3);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(Cyclotomic::parse(a.str(), F), a);
  }
  EXPECT_TRUE(Cyclotomic(mpq_class(3, 7)).is_rational());
  EXPECT_FALSE(F.epsilon().is_rational());
}

TEST(Specialize, Examples) {
  const int l = 3;
  const CycloField& F = CycloField::get(l);
  Cyclotomic eps = F.epsilon();
  RatFunc f(LaurentPoly::q(2) - LaurentPoly(1), LaurentPoly::q(1) - LaurentPoly(1));
  EXPECT_EQ(specialize_at_root(f, l), eps + Cyclotomic(1));
  Cyclotomic d = specialize_at_root(RatFunc::q(1) - RatFunc::q(-1), l);
  EXPECT_EQ(d, eps - eps.inverse());
  EXPECT_FALSE(d.is_zero());
  RatFunc g(LaurentPoly::q(l) - LaurentPoly::q(-l), LaurentPoly::q(l) - LaurentPoly::q(-l));
  EXPECT_EQ(specialize_at_root(g, l), Cyclotomic(1));
  RatFunc pole(LaurentPoly(1), LaurentPoly::q(l) - LaurentPoly::q(-l));
  EXPECT_THROW(specialize_at_root(pole, l), PoleAtSpecialization);
  // generic point route agrees with the exponent-table route
  EXPECT_EQ(specialize(f, F.sqrt_epsilon()), specialize_at_root(f, l));
}

TEST(Specialize, MultiplicativeOnRandomPairs) {
  std::mt19937 rng(15);
  int checked = 0;
  for (int l : {3, 5}) {
    for (int trial = 0; trial < 100; ++trial) {
      RatFunc a = random_rat(rng), b = random_rat(rng);
      try {
        Cyclotomic sa = specialize_at_root(a, l), sb = specialize_at_root(b, l);
        EXPECT_EQ(specialize_at_root(a * b, l), sa * sb);
        EXPECT_EQ(specialize_at_root(a + b, l), sa + sb);
        ++checked;
      } catch (const PoleAtSpecialization&) {
      }
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(Chebyshev, FirstPolynomials) {
  EXPECT_EQ(chebyshev(0), IntPoly({2}));
  EXPECT_EQ(chebyshev(1), IntPoly({0, 1}));
  EXPECT_EQ(chebyshev(2), IntPoly({-2, 0, 1}));
  EXPECT_EQ(chebyshev(3), IntPoly({0, -3, 0, 1}));
}

TEST(Chebyshev, SumOfPowersIdentity) {
  // T_k(u + u^{-1}) = u^k + u^{-k}, evaluated in the Laurent ring.
  LaurentPoly u = LaurentPoly::v(1) + LaurentPoly::v(-1);
  for (int k = 0; k <= 9; ++k)
    EXPECT_EQ(chebyshev_eval(k, u, LaurentPoly(1)), LaurentPoly::v(k) + LaurentPoly::v(-k)) << k;
}

TEST(Chebyshev, CompositionLaw) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) EXPECT_EQ(chebyshev(a * b), compose(chebyshev(a), chebyshev(b))) << a << "," << b;
}
