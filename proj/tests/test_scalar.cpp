#include <gtest/gtest.h>

#include "nilext.hpp"
#include "property_suites.hpp"

using namespace nilext;

TEST(Rational, AddsFractions) { EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6)); }

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("10/-4"), ParseError);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(Rational, ParseRejectsGarbage) { EXPECT_THROW(Rational::parse("1/x"), ParseError); }

TEST(Cyclotomic, ZetaCubedSquaredIsMinusOne) {
  Cyclotomic12 z3 = Cyclotomic12::zeta_power(3);
  EXPECT_EQ(z3 * z3, Cyclotomic12(-1));
  EXPECT_EQ(Cyclotomic12::i() * Cyclotomic12::i(), Cyclotomic12(-1));
}

TEST(Cyclotomic, OmegaIsPrimitiveCubeRoot) {
  Cyclotomic12 w = Cyclotomic12::omega();
  EXPECT_EQ(w * w * w, Cyclotomic12(1));
  EXPECT_NE(w, Cyclotomic12(1));
  EXPECT_EQ(w, Cyclotomic12::zeta_power(2) - Cyclotomic12(1));
}

TEST(Cyclotomic, SerializesAndParses) {
  Cyclotomic12 x(Cyclotomic12::Coefficients{Rational(1, 2), Rational(-1), Rational(0), Rational(3)});
  EXPECT_EQ(Cyclotomic12::parse(x.str()), x);
  EXPECT_EQ(Cyclotomic12::parse("z^6"), Cyclotomic12(-1));
}

TEST(Cyclotomic, InverseAndDivisionByZero) {
  Cyclotomic12 x = Cyclotomic12(2) + Cyclotomic12::zeta();
  EXPECT_EQ(x * x.inverse(), Cyclotomic12(1));
  EXPECT_THROW(Cyclotomic12(0).inverse(), DivisionByZero);
}

TEST(PrimeField, HalfInF5IsThree) {
  EXPECT_EQ(PrimeField<5>(1) / PrimeField<5>(2), PrimeField<5>(3));
  EXPECT_EQ(PrimeField<5>(3).str(), "3 mod 5");
}

TEST(PrimeField, DivisionByZeroThrows) { EXPECT_THROW(PrimeField<7>(0).inverse(), DivisionByZero); }

TEST(PrimeField, ReductionOfRationals) {
  EXPECT_EQ(from_rational<PrimeField<5>>(Rational(1, 2)), PrimeField<5>(3));
  EXPECT_THROW(from_rational<PrimeField<3>>(Rational(1, 3)), DivisionByZero);
}

TEST(FieldArith, DispatchesOnField) {
  EXPECT_EQ(to_string(field_arith(parse_scalar("Q", "1/2"), parse_scalar("Q", "1/3"), ArithOp::add)), "5/6");
  EXPECT_EQ(to_string(field_arith(parse_scalar("F5", "1"), parse_scalar("F5", "2"), ArithOp::div)), "3 mod 5");
}

TEST(FieldArith, MixedFieldsThrow) {
  EXPECT_THROW(field_arith(parse_scalar("Q", "1"), parse_scalar("F5", "1"), ArithOp::add), FieldMismatch);
  EXPECT_THROW(field_arith(parse_scalar("F2", "1"), parse_scalar("F3", "1"), ArithOp::mul), FieldMismatch);
}

TEST(FieldArith, DivisionByZeroThrows) {
  EXPECT_THROW(field_arith(parse_scalar("QZ12", "1"), parse_scalar("QZ12", "0"), ArithOp::div), DivisionByZero);
}

TEST(RootsOfUnity, Small) {
  EXPECT_EQ(roots_of_unity(1), std::vector<Cyclotomic12>{Cyclotomic12(1)});
  EXPECT_EQ(roots_of_unity(2), (std::vector<Cyclotomic12>{Cyclotomic12(1), Cyclotomic12(-1)}));
}

TEST(RootsOfUnity, CubeRoots) {
  Cyclotomic12 z2 = Cyclotomic12::zeta_power(2);
  auto r = roots_of_unity(3);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], Cyclotomic12(1));
  EXPECT_EQ(r[1], z2 - Cyclotomic12(1));
  EXPECT_EQ(r[2], -z2);
}

TEST(RootsOfUnity, EveryDivisorGivesDistinctRoots) {
  for (int n : {1, 2, 3, 4, 6, 12}) {
    auto r = roots_of_unity(n);
    ASSERT_EQ(r.size(), static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < r.size(); ++a) {
      Cyclotomic12 p(1);
      for (int k = 0; k < n; ++k) p = p * r[a];
      EXPECT_EQ(p, Cyclotomic12(1));
      for (std::size_t b = a + 1; b < r.size(); ++b) EXPECT_NE(r[a], r[b]);
    }
  }
}

TEST(RootsOfUnity, NonDivisorThrows) {
  EXPECT_THROW(roots_of_unity(5), PreconditionFailed);
  EXPECT_THROW(roots_of_unity(0), PreconditionFailed);
}

TEST(MultiPoly, DifferenceOfSquares) {
  MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
}

TEST(MultiPoly, SubstituteIntoTransformFormula) {
  auto p = to_multipoly("x^2*(x*alpha1+y*alpha6)");
  auto q = p.substitute({{"x", MultiPoly(2)}, {"y", MultiPoly(0)}});
  EXPECT_EQ(q, MultiPoly(8) * MultiPoly::variable("alpha1"));
}

TEST(MultiPoly, SubstituteUnknownVariableThrows) {
  auto p = to_multipoly("x+1");
  EXPECT_THROW(p.substitute({{"w", MultiPoly(1)}}), UnknownName);
}

TEST(MultiPoly, MatrixIdentityForFirstBase) {
  auto check = verify_transform_table(Catalog::builtin(), "CD3_01");
  EXPECT_TRUE(check.ok) << check.detail;
  EXPECT_EQ(check.computed.back(), to_multipoly("x^8*alpha7"));
}

TEST(MultiPoly, CanonicalZero) {
  MultiPoly x = MultiPoly::variable("x");
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE((x - x).terms().empty());
  EXPECT_EQ((x - x).str(), "0");
}

TEST(Properties, FieldAxiomsAllFields) {
  for (const auto& o : {props::field_axioms<Rational>(), props::field_axioms<Cyclotomic12>(),
                        props::field_axioms<PrimeField<2>>(), props::field_axioms<PrimeField<3>>(),
                        props::field_axioms<PrimeField<5>>(), props::field_axioms<PrimeField<7>>()}) {
    EXPECT_GE(o.trials, 1000u) << o.name;
    EXPECT_TRUE(o.ok()) << o.name << ": " << o.first_failure;
  }
}

TEST(Properties, CyclotomicReduction) {
  auto o = props::cyclotomic_reduction();
  EXPECT_GE(o.trials, 200u);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, PolynomialEqualityMatchesGridEvaluation) {
  auto o = props::multipoly_equality();
  EXPECT_GE(o.trials, 200u);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}
