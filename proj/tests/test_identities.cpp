#include <gtest/gtest.h>

#include "nilext.hpp"
#include "property_suites.hpp"

using namespace nilext;
using Q = Rational;

namespace {

Algebra<Q> table(const std::string& id) { return Catalog::builtin().instantiate<Q>(id, {}); }

Word x(int v) { return Word::leaf(v); }
Word m(Word a, Word b) { return Word::mul(std::move(a), std::move(b)); }

Subspace<Q> all_but_last(std::size_t n) {
  std::vector<Vec<Q>> vs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + 1 != n || j + 1 != n) vs.push_back(form_vec(delta<Q>(n, i, j)));
  return Subspace<Q>(n * n, vs);
}

}  // namespace

TEST(EvaluateWord, SquareOfE1) {
  auto a = table("CD3_01");
  EXPECT_EQ(evaluate_word(a, m(x(0), x(1)), {unit_vec<Q>(3, 0), unit_vec<Q>(3, 0)}), unit_vec<Q>(3, 1));
}

TEST(EvaluateWord, Leaf) {
  auto a = table("CD3_01");
  Vec<Q> v{Q(1), Q(2), Q(3)};
  EXPECT_EQ(evaluate_word(a, x(0), {v}), v);
}

TEST(EvaluateWord, ZeroArgument) {
  auto a = table("CD3_01");
  auto w = m(m(x(0), x(1)), x(2));
  EXPECT_TRUE(is_zero_vec(evaluate_word(a, w, {unit_vec<Q>(3, 0), zero_vec<Q>(3), unit_vec<Q>(3, 0)})));
}

TEST(EvaluateWord, ArityMismatchThrows) {
  auto a = table("CD3_01");
  EXPECT_THROW(evaluate_word(a, m(x(0), x(1)), {unit_vec<Q>(3, 0)}), DimensionMismatch);
}

TEST(Holds, ThreeDimensionalBaseIsCd) { EXPECT_TRUE(holds(table("CD3_01"), builtin_set("cd"))); }

TEST(Holds, ExtensionFailsSecondCdIdentity) {
  auto a = table("N4_17");
  EXPECT_FALSE(holds(a, builtin("cd2")));
  // (a, x, y, b) = (e1, e1, e1, e2); variables are ordered x, y, a, b.
  std::vector<Vec<Q>> args{unit_vec<Q>(4, 0), unit_vec<Q>(4, 0), unit_vec<Q>(4, 0), unit_vec<Q>(4, 1)};
  auto id = builtin("cd2");
  std::vector<Identity::Term> lhs(id.terms().begin(), id.terms().begin() + 2);
  std::vector<Identity::Term> rhs(id.terms().begin() + 2, id.terms().end());
  for (auto& [c, w] : rhs) c = -c;
  EXPECT_EQ(evaluate_identity(a, Identity("lhs", 4, lhs), args), (Vec<Q>{Q(0), Q(0), Q(0), Q(-1)}));
  EXPECT_EQ(evaluate_identity(a, Identity("rhs", 4, rhs), args), (Vec<Q>{Q(0), Q(0), Q(0), Q(1)}));
}

TEST(Holds, ZeroAlgebraSatisfiesEverything) {
  for (const auto& name : builtin_names()) EXPECT_TRUE(holds(Algebra<Q>::zero(3), builtin(name))) << name;
}

TEST(Holds, CounterexampleReported) {
  auto c = counterexample(table("N4_17"), builtin("cd2"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 4u);
}

TEST(Builtin, JacobiOfCommutatorHasTwelveWords) {
  auto id = builtin("jacobi_commutator");
  EXPECT_EQ(id.arity(), 3);
  EXPECT_EQ(id.terms().size(), 12u);
}

TEST(Builtin, ZeroAliaHasSixWords) {
  auto id = builtin("alia0");
  EXPECT_EQ(id.arity(), 3);
  EXPECT_EQ(id.terms().size(), 6u);
}

// The displayed identity ((xy)a)b - ((xy)b)a = ((xa)b - (xb)a)y + x((ya)b - (yb)a)
// has six signed words.
TEST(Builtin, FirstCdIdentity) {
  auto id = builtin("cd1");
  EXPECT_EQ(id.arity(), 4);
  EXPECT_EQ(id.terms().size(), 6u);
}

TEST(Builtin, UnknownNameThrows) { EXPECT_THROW(builtin("jordan"), UnknownName); }

TEST(Builtin, RendersAsSignedWords) {
  EXPECT_EQ(builtin("commutative").str(), "+(x1*x2) -(x2*x1)");
}

TEST(Identity, RejectsNonMultilinearWords) {
  EXPECT_THROW(Identity("bad", 2, {{Q(1), m(x(0), x(0))}}), PreconditionFailed);
  EXPECT_THROW(Identity("bad", 1, {{Q(1), m(x(0), x(1))}}), PreconditionFailed);
}

TEST(InducedConstraints, CdCocyclesOfFirstBase) {
  auto a = table("CD3_01");
  auto zcd = induced_cocycle_constraints(a, builtin_set("cd"));
  auto b2 = b2_basis(a);
  EXPECT_TRUE(zcd.contains(b2));
  Subspace<Q> expected = b2.sum(Subspace<Q>(9, {form_vec(delta<Q>(3, 0, 1)), form_vec(delta<Q>(3, 1, 0))}));
  EXPECT_EQ(zcd, expected);
}

TEST(InducedConstraints, AliaOnCommutativeBaseIsEverything) {
  EXPECT_EQ(induced_cocycle_constraints(table("CD3_01"), builtin("alia0")), Subspace<Q>::full(9));
}

TEST(InducedConstraints, AliaOnThirdBaseDropsLastCorner) {
  EXPECT_EQ(induced_cocycle_constraints(table("CD3_03"), builtin("alia0")), all_but_last(3));
}

TEST(InducedConstraints, BaseMustSatisfyIdentity) {
  EXPECT_THROW(induced_cocycle_constraints(table("N4_17"), builtin("cd2")), PreconditionFailed);
}

TEST(InducedConstraints, AliaSpacesCoincideOnThreeDimensionalBases) {
  for (const auto& a : props::base_algebras()) {
    auto z0 = induced_cocycle_constraints(a, builtin_set("alia0"));
    EXPECT_EQ(z0, induced_cocycle_constraints(a, builtin_set("alia1"))) << a.label();
    EXPECT_EQ(z0, induced_cocycle_constraints(a, builtin_set("two_sided_alia"))) << a.label();
  }
}

TEST(InducedConstraints, CoboundariesAreCdCocycles) {
  for (const auto& a : props::base_algebras()) EXPECT_TRUE(cd_cocycles(a).contains(b2_basis(a))) << a.label();
}

TEST(Properties, InducedConstraintsAgreeWithExtensions) {
  auto o = props::induced_constraints();
  EXPECT_GE(o.trials, 200u);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}
