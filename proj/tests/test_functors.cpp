#include <gtest/gtest.h>

#include "frobex/catalog.hpp"
#include "frobex/functors.hpp"

using namespace frobex;

namespace {

CycField f8() { return field_make(8); }

CycScalar q(long v) { return CycScalar(f8(), v); }

/// (kC2, id, sqrt2 e).
ExtFrobAlgebra c2_plus() { return group_phi_trivial_extension(cyclic_group(2), 1, f8()); }

/// (kC2, g -> -g, 0).
ExtFrobAlgebra c2_flip()
{
    Mat phi(f8(), 2, 2);
    phi.set(0, 0, q(1));
    phi.set(1, 1, q(-1));
    return {group_algebra(cyclic_group(2), f8()), {phi, Vec(f8(), 2)}};
}

/// kC2 with Delta halved and (I, u); separable.
ExtFrobAlgebra c2_separable()
{
    FrobAlgebra half = rescale_comultiplication(group_algebra(cyclic_group(2), f8()), CycScalar(f8(), Rational(1, 2)));
    return {half, separable_extension(half)};
}

/// The Frobenius algebra kC2 with its non-separable structure and (I, u) as formal extension data.
ExtFrobAlgebra c2_plain_data()
{
    FrobAlgebra fa = group_algebra(cyclic_group(2), f8());
    return {fa, {Mat::identity(f8(), 2), fa.u()}};
}

ObjectSample sample(std::vector<std::size_t> dims, std::size_t per_pair = 2)
{
    return make_sample(f8(), std::move(dims), per_pair, 7);
}

} // namespace

TEST(TensorProductExt, ProductsOfPureTensors)
{
    const ExtFrobAlgebra a = c2_plus(), b = c2_flip();
    const ExtFrobAlgebra t = tensor_product_ext(a, b);
    ASSERT_EQ(t.dim(), 4u);
    EXPECT_TRUE(check_extended(t).passed());
    EXPECT_TRUE(t.theta().is_zero());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    const Vec x = kron(Vec::basis(f8(), 2, i), Vec::basis(f8(), 2, j));
                    const Vec y = kron(Vec::basis(f8(), 2, k), Vec::basis(f8(), 2, l));
                    const Vec expected = kron(multiply(a.frob.algebra, Vec::basis(f8(), 2, i), Vec::basis(f8(), 2, k)),
                                              multiply(b.frob.algebra, Vec::basis(f8(), 2, j), Vec::basis(f8(), 2, l)));
                    EXPECT_EQ(multiply(t.frob.algebra, x, y), expected);
                }
    const ExtFrobAlgebra sq = tensor_product_ext(c2_plus(), c2_plus());
    EXPECT_TRUE(check_extended(sq).passed());
    EXPECT_EQ(sq.theta(), q(2) * Vec::basis(f8(), 4, 0));
}

TEST(TensorProductExt, UnitIsNeutral)
{
    const ExtFrobAlgebra a = c2_plus();
    EXPECT_EQ(tensor_product_ext(unit_ext_algebra(f8()), a), a);
    EXPECT_EQ(tensor_product_ext(a, unit_ext_algebra(f8())), a);
    EXPECT_THROW(tensor_product_ext(a, unit_ext_algebra(field_make(1))), FieldMismatch);
}

TEST(BiproductExt, BlocksAndZeroObject)
{
    const ExtFrobAlgebra a = c2_plus();
    EXPECT_EQ(biproduct_ext(a, zero_ext_algebra(f8())), a);
    EXPECT_EQ(biproduct_ext(zero_ext_algebra(f8()), a), a);
    const ExtFrobAlgebra split = biproduct_ext(unit_ext_algebra(f8()), unit_ext_algebra(f8()));
    ASSERT_EQ(split.dim(), 2u);
    EXPECT_TRUE(check_extended(split).passed());
    const Vec e0 = Vec::basis(f8(), 2, 0), e1 = Vec::basis(f8(), 2, 1);
    EXPECT_EQ(multiply(split.frob.algebra, e0, e0), e0);
    EXPECT_TRUE(multiply(split.frob.algebra, e0, e1).is_zero());
    EXPECT_EQ(split.frob.u(), e0 + e1);
    const ExtFrobAlgebra mixed = biproduct_ext(c2_plus(), c2_flip());
    EXPECT_TRUE(check_extended(mixed).passed());
    EXPECT_EQ(mixed.theta(), direct_sum(c2_plus().theta(), Vec(f8(), 2)));
    EXPECT_TRUE(check_extended(zero_ext_algebra(f8())).passed());
}

TEST(RealizedFunctor, StructureMorphisms)
{
    const RealizedFunctor unit = realize_functor(FunctorKind::tensor, unit_ext_algebra(f8()), "k");
    EXPECT_TRUE(unit.F2(2, 3).is_identity());
    const RealizedFunctor t = realize_functor(FunctorKind::tensor, c2_plus());
    EXPECT_EQ(t.F0(), Mat::column(c2_plus().frob.u()));
    EXPECT_EQ(t.F0().rows(), 2u);
    EXPECT_EQ(t.F0().cols(), 1u);
    const RealizedFunctor bp = realize_functor(FunctorKind::biproduct, c2_plus());
    EXPECT_EQ(bp.obj(3), 5u);
    EXPECT_EQ(bp.F2(2, 3).rows(), 8u);
    EXPECT_EQ(bp.F2(2, 3).cols(), 20u);
    ExtFrobAlgebra bad = c2_plus();
    bad.ext.theta = Vec(f8(), 2);
    EXPECT_THROW(realize_functor(FunctorKind::tensor, bad), PreconditionError);
    EXPECT_THROW(realize_functor(FunctorKind::compose, c2_plus()), PreconditionError);
}

TEST(FrobeniusFunctor, TensorAndBiproductPass)
{
    const Report t = check_frobenius_functor(realize_functor(FunctorKind::tensor, c2_plus()), sample({1, 2, 3}));
    EXPECT_TRUE(t.passed()) << (t.passed() ? "" : t.failures().front());
    for (const char* name : {"monoidal.associativity", "comonoidal.coassociativity", "frobenius.first",
                             "frobenius.second", "naturality.F2_left", "naturality.F_2_right"})
        EXPECT_TRUE(t.passed(name)) << name;
    EXPECT_TRUE(check_frobenius_functor(realize_functor(FunctorKind::biproduct, c2_plus()), sample({1, 2})).passed());
}

TEST(FrobeniusFunctor, CorruptedProductBreaksFrobeniusCondition)
{
    ExtFrobAlgebra b = c2_plus();
    b.frob.algebra.m.set(1, 1 * 2 + 1, q(0));
    b.frob.algebra.m.set(0, 1 * 2 + 1, q(0));
    const Report r = check_frobenius_functor(tensor_with(b), sample({1, 2}));
    EXPECT_FALSE(r.passed("frobenius.first") && r.passed("frobenius.second"));
}

TEST(SeparableFunctor, DependsOnB)
{
    const ObjectSample s = sample({1, 2, 3}, 0);
    EXPECT_TRUE(check_separable_functor(realize_functor(FunctorKind::tensor, c2_separable()), s));
    EXPECT_FALSE(check_separable_functor(tensor_with(c2_plain_data()), s));
    EXPECT_TRUE(check_separable_functor(realize_functor(FunctorKind::tensor, unit_ext_algebra(f8())), s));
    EXPECT_FALSE(check_separable_functor(realize_functor(FunctorKind::biproduct, c2_plus()), s));
}

TEST(ExtendedFunctor, ExamplesAndCorruption)
{
    const ObjectSample s = sample({1, 2, 3});
    for (const auto& b : {c2_plus(), c2_flip()}) {
        EXPECT_TRUE(check_extended_functor(realize_functor(FunctorKind::tensor, b), s).passed());
        EXPECT_TRUE(check_extended_functor(realize_functor(FunctorKind::biproduct, b), s).passed());
    }
    const RealizedFunctor sep = with_trivial_extension(realize_functor(FunctorKind::tensor, c2_separable()));
    EXPECT_TRUE(check_extended_functor(sep, s).passed());
    const RealizedFunctor zero_check = with_check(realize_functor(FunctorKind::tensor, c2_plus()), Mat(f8(), 2, 1));
    const Report r = check_extended_functor(zero_check, s);
    EXPECT_FALSE(r.passed("b.check_square"));
    EXPECT_TRUE(r.passed("c.i.involution"));
    ExtFrobAlgebra b = c2_plus();
    b.frob.algebra.m.set(0, 3, q(0));
    EXPECT_THROW(check_extended_functor(tensor_with(b), s), PreconditionError);
}

TEST(ApplyFunctor, MatchesDirectConstructions)
{
    const std::vector<ExtFrobAlgebra> algebras{c2_plus(), c2_flip(), unit_ext_algebra(f8(), -1)};
    for (const auto& a : algebras)
        for (const auto& b : algebras) {
            const ExtFrobAlgebra t = apply_functor(realize_functor(FunctorKind::tensor, b), a);
            EXPECT_TRUE(check_extended(t).passed());
            EXPECT_EQ(t, tensor_product_ext(a, b));
            const ExtFrobAlgebra p = apply_functor(realize_functor(FunctorKind::biproduct, b), a);
            EXPECT_TRUE(check_extended(p).passed());
            EXPECT_EQ(p, biproduct_ext(a, b));
        }
    const ExtFrobAlgebra a = c2_plus();
    EXPECT_EQ(apply_functor(realize_functor(FunctorKind::tensor, unit_ext_algebra(f8())), a), a);
    EXPECT_EQ(apply_functor(identity_functor(f8()), a), a);
    ExtFrobAlgebra bad = a;
    bad.ext.theta = Vec(f8(), 2);
    EXPECT_THROW(apply_functor(identity_functor(f8()), bad), PreconditionError);
}

TEST(ComposeFunctors, ExtendedAndIdentityNeutral)
{
    const ObjectSample s = sample({1, 2});
    const RealizedFunctor t1 = realize_functor(FunctorKind::tensor, c2_plus(), "B");
    const RealizedFunctor t2 = realize_functor(FunctorKind::tensor, c2_flip(), "B'");
    const RealizedFunctor bp = realize_functor(FunctorKind::biproduct, c2_plus(), "B");
    for (const auto& [g, f] : {std::pair{t1, t2}, std::pair{bp, t2}, std::pair{t2, bp}})
        EXPECT_TRUE(check_extended_functor(compose_functors(g, f, s), s).passed());
    const RealizedFunctor c = compose_functors(t1, identity_functor(f8()), s);
    EXPECT_EQ(c.F0(), t1.F0());
    EXPECT_EQ(c.F_0(), t1.F_0());
    EXPECT_EQ(c.Fcheck(), t1.Fcheck());
    for (std::size_t x : s.dims) {
        EXPECT_EQ(c.Fhat(x), t1.Fhat(x));
        for (std::size_t y : s.dims) {
            EXPECT_EQ(c.F2(x, y), t1.F2(x, y));
            EXPECT_EQ(c.F_2(x, y), t1.F_2(x, y));
        }
    }
    const ExtFrobAlgebra a = c2_plus();
    EXPECT_EQ(apply_functor(compose_functors(t1, t2, s), a), apply_functor(t1, apply_functor(t2, a)));
    const RealizedFunctor bad = with_check(t1, Mat(f8(), 2, 1));
    EXPECT_THROW(compose_functors(bad, t2, s), PreconditionError);
}

TEST(ObjectSample, Deterministic)
{
    const ObjectSample a = make_sample(f8(), {1, 2, 3}, 5, 42);
    const ObjectSample b = make_sample(f8(), {1, 2, 3}, 5, 42);
    ASSERT_EQ(a.morphisms.size(), 45u);
    for (std::size_t i = 0; i < a.morphisms.size(); ++i)
        EXPECT_EQ(a.morphisms[i].map, b.morphisms[i].map);
    EXPECT_THROW(make_sample(f8(), {0, 1}), PreconditionError);
}
