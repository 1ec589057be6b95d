#include <gtest/gtest.h>

#include "frobex/frobenius.hpp"

using namespace frobex;

namespace {

CycScalar q(CycField f, long v) { return CycScalar(f, v); }

/// k[C2] with basis e, g, Delta(e) = e x e + g x g.
FrobAlgebra c2(CycField f)
{
    Mat m(f, 2, 4);
    m.set(0, 0, q(f, 1));
    m.set(1, 1, q(f, 1));
    m.set(1, 2, q(f, 1));
    m.set(0, 3, q(f, 1));
    AlgebraData a{f, 2, {"e", "g"}, m, Vec::basis(f, 2, 0)};
    Vec d1(f, 4);
    d1[0] = q(f, 1);
    d1[3] = q(f, 1);
    return make_frobenius(a, d1);
}

/// k[x]/(x^2) with Delta(1) = 1 x x + x x 1.
FrobAlgebra dual_numbers(CycField f)
{
    Mat m(f, 2, 4);
    m.set(0, 0, q(f, 1));
    m.set(1, 1, q(f, 1));
    m.set(1, 2, q(f, 1));
    AlgebraData a{f, 2, {"1", "x"}, m, Vec::basis(f, 2, 0)};
    Vec d1(f, 4);
    d1[1] = q(f, 1);
    d1[2] = q(f, 1);
    return make_frobenius(a, d1);
}

} // namespace

TEST(Frobenius, GroupAlgebraPasses)
{
    CycField f = field_make(1);
    FrobAlgebra fa = c2(f);
    Report r = check_frobenius(fa);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.items().size(), 9u);
    for (const char* name : {"associativity", "unitality.left", "unitality.right", "coassociativity",
                             "counitality.left", "counitality.right", "frobenius_law.left_middle",
                             "frobenius_law.middle_right", "frobenius_law.left_right"})
        EXPECT_TRUE(r.passed(name)) << name;
    EXPECT_EQ(fa.eps(), Mat::row(Vec(f, {q(f, 1), q(f, 0)})));
}

TEST(Frobenius, DualNumbersCounitIsDualToX)
{
    CycField f = field_make(1);
    FrobAlgebra fa = dual_numbers(f);
    EXPECT_TRUE(check_frobenius(fa).passed());
    EXPECT_EQ(fa.eps().at(0, 0), q(f, 0));
    EXPECT_EQ(fa.eps().at(0, 1), q(f, 1));
    EXPECT_FALSE(check_separable(fa));
}

TEST(Frobenius, CorruptedProductNamesFirstViolation)
{
    CycField f = field_make(1);
    FrobAlgebra fa = c2(f);
    fa.algebra.m.set(1, 2, q(f, 0));
    Report r = check_frobenius(fa);
    EXPECT_FALSE(r.passed());
    EXPECT_FALSE(r.passed("associativity"));
    EXPECT_TRUE(r.passed("unitality.left"));
    const CheckItem* item = r.find("unitality.right");
    ASSERT_NE(item, nullptr);
    EXPECT_FALSE(item->passed);
    EXPECT_NE(item->detail.find("input (g), output component (g)"), std::string::npos) << item->detail;
}

TEST(Frobenius, WrongCounitFailsCounitality)
{
    CycField f = field_make(1);
    FrobAlgebra fa = c2(f);
    fa.coalgebra.eps = Mat::row(Vec(f, {q(f, 1), q(f, 1)}));
    Report r = check_frobenius(fa);
    EXPECT_FALSE(r.passed("counitality.left"));
    EXPECT_FALSE(r.passed("counitality.right"));
    EXPECT_TRUE(r.passed("associativity"));
}

TEST(Frobenius, ShapeErrors)
{
    CycField f = field_make(1);
    FrobAlgebra fa = c2(f);
    fa.coalgebra.eps = Mat(f, 1, 3);
    EXPECT_THROW(check_frobenius(fa), ShapeMismatch);
    FrobAlgebra other = c2(f);
    other.algebra.u = Vec(field_make(4), 2);
    EXPECT_THROW(check_frobenius(other), FieldMismatch);
}

TEST(Frobenius, CounitSolveStatuses)
{
    CycField f = field_make(1);
    Mat zero(f, 4, 2);
    EXPECT_EQ(solve_counit(f, 2, zero).status, CounitStatus::inconsistent);
    FrobAlgebra fa = c2(f);
    EXPECT_EQ(solve_counit(f, 2, fa.delta()).status, CounitStatus::unique);
    Vec d1(f, 4);
    EXPECT_THROW(make_frobenius(fa.algebra, d1), PreconditionError);
}

TEST(Frobenius, PairingIsNondegenerate)
{
    CycField f = field_make(1);
    for (const FrobAlgebra& fa : {c2(f), dual_numbers(f)}) {
        Mat p = pairing(fa);
        EXPECT_EQ(rank(p), fa.dim());
    }
    Mat expected = Mat::identity(f, 2);
    EXPECT_EQ(pairing(c2(f)), expected);
}

TEST(Frobenius, SeparabilityAndRescaling)
{
    CycField f = field_make(1);
    FrobAlgebra fa = c2(f);
    EXPECT_FALSE(check_separable(fa));
    FrobAlgebra half = rescale_comultiplication(fa, CycScalar(f, Rational(1, 2)));
    EXPECT_TRUE(check_frobenius(half).passed());
    EXPECT_TRUE(check_separable(half));
    EXPECT_TRUE(check_separable(unit_frobenius(f)));
}

TEST(Frobenius, DeltaFromDeltaOneIsLeftLinear)
{
    CycField f = field_make(1);
    FrobAlgebra fa = c2(f);
    const Vec g = Vec::basis(f, 2, 1);
    Vec expected(f, 4);
    expected[1] = q(f, 1);
    expected[2] = q(f, 1);
    EXPECT_EQ(fa.delta() * g, expected);
    EXPECT_EQ(multiply(fa.algebra, g, g), Vec::basis(f, 2, 0));
    EXPECT_EQ(left_mult(fa.algebra, g), right_mult(fa.algebra, g));
}
