#include <gtest/gtest.h>

#include "nilext.hpp"
#include "property_suites.hpp"

using namespace nilext;
using Q = Rational;
using Z = Cyclotomic12;
using F2 = PrimeField<2>;
using F3 = PrimeField<3>;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

Form<Q> D(std::size_t i, std::size_t j) { return delta<Q>(3, i - 1, j - 1); }

Matrix<Q> first_family(int x, int y) {
  return cat().aut_family("CD3_01").specialize<Q>({{"x", Q(x)}, {"y", Q(y)}});
}

TransformCheck check_with_table(const std::string& base, std::vector<std::string> formulas) {
  const auto& e = cat().entry(base);
  std::vector<PolyMatrix> nablas;
  for (const auto& t : cat().base_data(base)->nablas) nablas.push_back(symbolic_form(t, e.dim));
  std::vector<MultiPoly> table;
  for (const auto& t : formulas) table.push_back(to_multipoly(t));
  return verify_transform_table(cat().aut_family(base).matrix, nablas, symbolic_b2_generators(symbolic_algebra(e)),
                                table);
}

}  // namespace

TEST(Act, IdentityFixesForms) {
  auto theta = D(1, 2) * Q(3) + D(3, 3);
  EXPECT_EQ(act(Matrix<Q>::identity(3), theta), theta);
}

TEST(Act, ScalingCorner) { EXPECT_EQ(act(first_family(2, 0), D(3, 3)), D(3, 3) * Q(256)); }

TEST(Act, ShearMovesForm) { EXPECT_EQ(act(first_family(1, 1), D(3, 2)), D(3, 2) + D(1, 2)); }

TEST(Act, RightActionOnly) {
  auto phi = first_family(1, 1), psi = first_family(2, 0);
  auto theta = D(3, 2) + D(1, 3);
  ASSERT_NE(phi * psi, psi * phi);
  EXPECT_EQ(act(phi * psi, theta), act(psi, act(phi, theta)));
  EXPECT_NE(act(phi * psi, theta), act(phi, act(psi, theta)));
}

TEST(Act, SizeMismatchThrows) { EXPECT_THROW(act(Matrix<Q>::identity(2), D(1, 1)), DimensionMismatch); }

TEST(AutFamily, ZeroScaleRejected) {
  auto fam = cat().aut_family("CD3_01");
  EXPECT_THROW(fam.specialize<Q>({{"x", Q(0)}, {"y", Q(1)}}), ConstraintViolation);
}

TEST(AutFamily, MembersAreAutomorphisms) {
  for (const auto& b : cat().bases()) {
    auto fam = cat().aut_family(b.base);
    const auto& e = cat().entry(b.base);
    for (int x : {1, -2, 3})
      for (int y : {0, 1, -1}) {
        std::map<std::string, Q> v{{"x", Q(x)}, {"y", Q(y)}, {"z", Q(y + 2)}, {"lambda", Q(3)}};
        Sample s;
        if (!e.params.empty()) s["lambda"] = Z(3);
        EXPECT_TRUE(is_automorphism(cat().instantiate<Q>(e, s), fam.specialize(v))) << b.base;
      }
  }
}

TEST(TransformTable, AllBasesVerify) {
  for (const auto& b : cat().bases()) {
    auto check = verify_transform_table(cat(), b.base);
    EXPECT_TRUE(check.ok) << b.base << ": " << check.detail;
    EXPECT_EQ(check.computed.size(), b.nablas.size());
  }
}

TEST(TransformTable, CorruptedFormulaIsCaught) {
  auto formulas = cat().base_data("CD3_01")->transform;
  formulas[6] = "x^7*alpha7";
  auto check = check_with_table("CD3_01", formulas);
  EXPECT_FALSE(check.ok);
  ASSERT_TRUE(check.first_difference.has_value());
  EXPECT_EQ(*check.first_difference, 6u);
}

TEST(TransformTable, WrongLengthThrows) {
  auto formulas = cat().base_data("CD3_01")->transform;
  formulas.pop_back();
  EXPECT_THROW(check_with_table("CD3_01", formulas), DimensionMismatch);
}

TEST(TransformTable, UnknownBaseThrows) { EXPECT_THROW(verify_transform_table(cat(), "N4_17"), UnknownName); }

TEST(AutGroup, ZeroPlaneOverF2IsGL2) { EXPECT_EQ(aut_group_fp(Algebra<F2>::zero(2)).size(), 6u); }

TEST(AutGroup, TwoDimensionalOverF3) {
  EXPECT_EQ(aut_group_fp(cat().instantiate<F3>("CD2s_01", {})).size(), 6u);
  EXPECT_EQ(aut_group_fp(cat().instantiate<F2>("CD2s_01", {})).size(), 2u);
}

TEST(AutGroup, ContainsDisplayedFamily) {
  auto group = aut_group_fp(cat().instantiate<F2>("CD3_01", {}));
  auto fam = cat().aut_family("CD3_01");
  for (int y : {0, 1}) {
    auto m = fam.specialize<F2>({{"x", F2(1)}, {"y", F2(y)}});
    EXPECT_NE(std::find(group.begin(), group.end(), m), group.end()) << y;
  }
  for (const auto& g : group) EXPECT_TRUE(is_automorphism(cat().instantiate<F2>("CD3_01", {}), g));
}

TEST(AutGroup, RejectsLargeDimension) { EXPECT_THROW(aut_group_fp(Algebra<F2>::zero(5)), PreconditionFailed); }

TEST(AutGroup, SearchBound) {
  EXPECT_THROW(aut_group_fp(cat().instantiate<F3>("CD3_01", {}), 5), ResourceBound);
}

TEST(Census, FirstBaseOverF2) {
  auto census = orbit_census_fp(cat().instantiate<F2>("CD3_01", {}));
  EXPECT_EQ(census.h2_dim, 7u);
  EXPECT_EQ(census.total_lines, 127u);
  EXPECT_TRUE(census.class_stable);
  std::size_t lines = 0, orbits = 0;
  for (const auto& o : census.orbits) {
    lines += o.size;
    ++orbits;
  }
  EXPECT_EQ(lines, 127u);
  std::size_t by_class = 0;
  for (const auto& [cls, count] : census.orbits_by_class) by_class += count;
  EXPECT_EQ(by_class, orbits);
}

TEST(Census, ZeroLine) {
  auto census = orbit_census_fp(Algebra<F2>::zero(1));
  EXPECT_EQ(census.total_lines, 1u);
  EXPECT_EQ(census.orbits.size(), 1u);
}

TEST(Census, RejectsLargePrime) {
  EXPECT_THROW(orbit_census_fp(cat().instantiate<PrimeField<5>>("CD3_01", {})), PreconditionFailed);
}

TEST(Census, ConsistentWithIsomorphismClasses) {
  for (const std::string id : {"CD3_01", "CD3_02", "CD3_03"}) {
    auto c = census_consistency(cat().instantiate<F2>(id, {}));
    EXPECT_TRUE(c.ok()) << id << ": " << c.u1_orbits << " orbits vs " << c.iso_classes << " classes";
    EXPECT_GE(c.u1_lines, c.u1_orbits) << id;
  }
}

TEST(VerifyIsomorphism, SignFlipWitness) {
  auto a = cat().instantiate<Q>("N4_31", {{"alpha", Z(1)}});
  auto b = cat().instantiate<Q>("N4_31", {{"alpha", Z(-1)}});
  auto v = iso_search(a, b);
  ASSERT_EQ(v.kind, Verdict::Kind::witness) << v.str();
  auto lift = [](const Q& r) { return Z(r); };
  EXPECT_TRUE(verify_isomorphism(a.map<Z>(lift), b.map<Z>(lift), *v.witness));
}

TEST(VerifyIsomorphism, IdentityAndMismatch) {
  auto a = cat().instantiate<Q>("N4_17", {});
  auto b = cat().instantiate<Q>("N4_18", {});
  EXPECT_TRUE(verify_isomorphism(a, a, Matrix<Q>::identity(4)));
  EXPECT_FALSE(verify_isomorphism(a, b, Matrix<Q>::identity(4)));
  EXPECT_FALSE(verify_isomorphism(a, a, Matrix<Q>::identity(3)));
}

TEST(IsoSearch, CubeRootWitness) {
  Z w = Z::omega();
  auto a = cat().instantiate<Z>("N4_05", {{"alpha", Z(1)}, {"beta", Z(1)}});
  auto b = cat().instantiate<Z>("N4_05", {{"alpha", w}, {"beta", w}});
  auto v = iso_search(a, b);
  ASSERT_EQ(v.kind, Verdict::Kind::witness) << v.str();
  EXPECT_TRUE(verify_isomorphism(a, b, *v.witness));
}

TEST(IsoSearch, DistinctByInvariant) {
  auto v = iso_search(cat().instantiate<Q>("N4_17", {}), cat().instantiate<Q>("N4_18", {}));
  EXPECT_EQ(v.kind, Verdict::Kind::distinct_by_invariant);
  EXPECT_FALSE(v.component.empty());
}

TEST(IsoSearch, FourParameterWitness) {
  auto a = cat().instantiate<Q>("N4_02", {{"alpha", Z(1)}, {"beta", Z(2)}, {"gamma", Z(3)}, {"delta", Z(4)}});
  auto b = cat().instantiate<Q>("N4_02", {{"alpha", Z(-1)}, {"beta", Z(-2)}, {"gamma", Z(-3)}, {"delta", Z(4)}});
  EXPECT_EQ(iso_search(a, b).kind, Verdict::Kind::witness);
}

TEST(IsoSearch, DimensionMismatch) {
  auto v = iso_search(Algebra<Q>::zero(3), Algebra<Q>::zero(4));
  EXPECT_EQ(v.kind, Verdict::Kind::distinct_by_invariant);
  EXPECT_EQ(v.component, "dim");
}

TEST(IsoSearchFp, FindsWitnessOverF3) {
  auto a = cat().instantiate<F3>("N4_31", {{"alpha", Z(1)}});
  auto b = cat().instantiate<F3>("N4_31", {{"alpha", Z(-1)}});
  auto phi = iso_search_fp(a, b);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(verify_isomorphism(a, b, *phi));
}

TEST(Properties, ActionComposition) {
  auto o = props::action_composition();
  EXPECT_GE(o.trials, 200u);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, ClassStability) {
  auto o = props::class_stability();
  EXPECT_GE(o.trials, 200u);
  EXPECT_TRUE(o.ok()) << o.first_failure;
}
