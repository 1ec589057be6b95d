#include <random>

#include <gtest/gtest.h>

#include "frobex/catalog.hpp"

using namespace frobex;

namespace {

CycScalar q(CycField f, long v) { return CycScalar(f, v); }

struct C2 {
    CycField f = field_make(8);
    FrobAlgebra fa = group_algebra(cyclic_group(2), f);
    CycScalar r2 = sqrt_rational(f, 2);
    Mat id = Mat::identity(f, 2);
    Mat neg = Mat::from_rows(f, {{q(f, 1), q(f, 0)}, {q(f, 0), q(f, -1)}});
    Vec e = Vec::basis(f, 2, 0);
    Vec g = Vec::basis(f, 2, 1);

    ExtFrobAlgebra ext(const Mat& phi, const Vec& theta) const { return {fa, {phi, theta}}; }
};

/// Every 2x2 matrix over the lattice that is a Frobenius involution, by direct evaluation.
std::vector<Mat> brute_involutions(const FrobAlgebra& fa, const CandidateLattice& lat)
{
    std::vector<Mat> out;
    const std::size_t L = lat.size();
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t c = 0; c < L; ++c)
                for (std::size_t d = 0; d < L; ++d) {
                    Mat m = Mat::from_rows(fa.field(), {{lat.values[a], lat.values[b]}, {lat.values[c], lat.values[d]}});
                    if ((m * m).is_identity() && check_frobenius_morphism(fa, fa, m).passed())
                        out.push_back(m);
                }
    std::sort(out.begin(), out.end(), [](const Mat& x, const Mat& y) { return compare(x, y) < 0; });
    return out;
}

} // namespace

TEST(CheckExtended, GroupAlgebraExamples)
{
    C2 c;
    EXPECT_TRUE(check_extended(c.ext(c.id, c.r2 * c.e)).passed());
    EXPECT_TRUE(check_extended(c.ext(c.neg, Vec(c.f, 2))).passed());
    Report bad = check_extended(c.ext(c.id, c.e));
    EXPECT_FALSE(bad.passed("iii.theta_square"));
    EXPECT_TRUE(bad.passed("ii.theta_invariance"));
    EXPECT_TRUE(bad.passed("i.involution"));
    for (const char* name : {"i.multiplicative", "i.unit", "i.comultiplicative", "i.counit", "i.involution"})
        EXPECT_NE(bad.find(name), nullptr) << name;
}

TEST(CheckExtended, NonInvolutionAndShapes)
{
    C2 c;
    Mat two = q(c.f, 2) * c.id;
    Report r = check_extended(c.ext(two, Vec(c.f, 2)));
    EXPECT_FALSE(r.passed("i.involution"));
    EXPECT_FALSE(r.passed("i.unit"));
    EXPECT_THROW(check_extended(c.ext(Mat::identity(c.f, 3), c.e)), ShapeMismatch);
}

TEST(KeyIdentity, HoldsOnValidAndFailsOnCorrupted)
{
    C2 c;
    EXPECT_TRUE(check_key_identity(c.ext(c.id, c.r2 * c.g)));
    EXPECT_TRUE(check_key_identity(c.ext(c.neg, Vec(c.f, 2))));
    EXPECT_FALSE(check_key_identity(c.ext(c.id, c.r2 * c.g + c.e)));
    CycField q1 = field_make(1);
    FrobAlgebra k = unit_frobenius(q1);
    ExtFrobAlgebra e{k, {Mat::identity(q1, 1), Vec(q1, {q(q1, 1)})}};
    EXPECT_TRUE(check_key_identity(e));
}

TEST(KeyIdentity, RandomValidStructuresFromKlein)
{
    auto all = klein_four_extensions(field_make(1));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        const ExtFrobAlgebra& e = all[rng() % all.size()];
        ASSERT_TRUE(check_extended(e).passed());
        EXPECT_TRUE(check_key_identity(e));
    }
}

TEST(SeparableExtension, UnitAndRescaledMatrix)
{
    CycField f = field_make(1);
    ExtStructure s = separable_extension(unit_frobenius(f));
    EXPECT_TRUE(s.phi.is_identity());
    EXPECT_EQ(s.theta, Vec(f, {q(f, 1)}));
    for (std::size_t n : {2u, 3u}) {
        FrobAlgebra m = rescale_comultiplication(matrix_frobenius(n, f), CycScalar(f, Rational(1, static_cast<long>(n))));
        ASSERT_TRUE(check_frobenius(m).passed());
        ExtStructure e = separable_extension(m);
        EXPECT_TRUE(check_extended({m, e}).passed());
        EXPECT_EQ(e.theta, m.u());
    }
    C2 c;
    EXPECT_EQ(c.fa.m() * c.fa.delta(), q(c.f, 2) * c.id);
    EXPECT_THROW(separable_extension(c.fa), PreconditionError);
}

TEST(ExtMorphism, WitnessAndObstruction)
{
    C2 c;
    reset_morphism_audit();
    Report ok = check_ext_morphism(c.ext(c.id, c.r2 * c.g), c.ext(c.id, -c.r2 * c.g), c.neg);
    EXPECT_TRUE(ok.passed());
    EXPECT_TRUE(ok.passed("isomorphism"));
    EXPECT_TRUE(check_ext_morphism(c.ext(c.neg, Vec(c.f, 2)), c.ext(c.neg, Vec(c.f, 2)), c.id).passed());
    Report fail = check_ext_morphism(c.ext(c.id, c.r2 * c.e), c.ext(c.id, -c.r2 * c.e), c.neg);
    EXPECT_FALSE(fail.passed("theta"));
    EXPECT_EQ(fail.find("isomorphism"), nullptr);
    MorphismAudit a = morphism_audit();
    EXPECT_EQ(a.passed, 2u);
    EXPECT_EQ(a.singular, 0u);
}

TEST(ExtMorphism, SingularPassingMapIsFlagged)
{
    CycField f = field_make(1);
    FrobAlgebra k = unit_frobenius(f);
    FrobAlgebra c2 = group_algebra(cyclic_group(2), f);
    ExtFrobAlgebra src{c2, {Mat::identity(f, 2), Vec(f, 2)}};
    ExtFrobAlgebra dst{c2, {Mat::identity(f, 2), Vec(f, 2)}};
    reset_morphism_audit();
    Mat zero(f, 2, 2);
    Report r = check_ext_morphism(src, dst, zero);
    EXPECT_FALSE(r.passed("unit"));
    EXPECT_EQ(morphism_audit().passed, 0u);
    (void)k;
}

TEST(Obstruction, LemmaExamples)
{
    C2 c;
    EXPECT_EQ(lemma_no_morphism_obstruction(c.ext(c.id, c.r2 * c.e), c.ext(c.id, -c.r2 * c.e)),
              Obstruction::obstructed);
    EXPECT_EQ(lemma_no_morphism_obstruction(c.ext(c.id, c.r2 * c.g), c.ext(c.id, -c.r2 * c.g)), Obstruction::unknown);
    EXPECT_EQ(lemma_no_morphism_obstruction(c.ext(c.id, c.r2 * c.e), c.ext(c.id, c.r2 * c.e)), Obstruction::unknown);
}

TEST(Predicates, PhiAndThetaTrivial)
{
    C2 c;
    EXPECT_TRUE(is_phi_trivial(c.ext(c.id, c.r2 * c.e)));
    EXPECT_FALSE(is_theta_trivial(c.ext(c.id, c.r2 * c.e)));
    EXPECT_FALSE(is_phi_trivial(c.ext(c.neg, Vec(c.f, 2))));
    EXPECT_TRUE(is_theta_trivial(c.ext(c.neg, Vec(c.f, 2))));
}

TEST(Involutions, GroupAlgebraC2MatchesBruteForce)
{
    C2 c;
    CandidateLattice lat = CandidateLattice::symmetric(c.f, {q(c.f, 1)}, "{0,+-1}");
    auto found = find_frobenius_involutions(c.fa, lat);
    ASSERT_EQ(found.size(), 2u);
    EXPECT_EQ(found, brute_involutions(c.fa, lat));
    EXPECT_TRUE(std::find(found.begin(), found.end(), c.neg) != found.end());
    EXPECT_TRUE(std::find(found.begin(), found.end(), c.id) != found.end());
}

TEST(Involutions, ComplexOverRealMatchesBruteForce)
{
    CycField f = field_make(8);
    FrobAlgebra cr = complex_over_real_frobenius(f);
    CandidateLattice lat = CandidateLattice::symmetric(f, {q(f, 1), sqrt_rational(f, 2)}, "");
    EXPECT_EQ(find_frobenius_involutions(cr, lat), brute_involutions(cr, lat));
    EXPECT_EQ(find_frobenius_involutions(cr, lat).size(), 2u);
}

TEST(Involutions, GroundFieldOnlyIdentity)
{
    CycField f = field_make(4);
    CandidateLattice lat = CandidateLattice::symmetric(f, {q(f, 1), q(f, 2), root_of_unity(f, 4, 1)}, "");
    auto found = find_frobenius_involutions(unit_frobenius(f), lat);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_TRUE(found.front().is_identity());
}

TEST(Involutions, TaftHasSignFlipOnG)
{
    CycField f = field_make(2);
    FrobAlgebra t2 = taft_algebra(2, 1, f);
    Mat flip = Mat::identity(f, 4);
    flip.set(2, 2, q(f, -1));
    flip.set(3, 3, q(f, -1));
    EXPECT_TRUE(check_frobenius_morphism(t2, t2, flip).passed());
    EXPECT_TRUE((flip * flip).is_identity());
    auto found = find_frobenius_involutions(t2, CandidateLattice::symmetric(f, {q(f, 1)}, ""));
    ASSERT_EQ(found.size(), 2u);
    EXPECT_TRUE(std::find(found.begin(), found.end(), flip) != found.end());
    EXPECT_TRUE(solve_theta(t2, flip, CandidateLattice::symmetric(f, {q(f, 1), q(f, 2)}, "")).points.empty());
}

TEST(Involutions, BudgetAndDimensionLimits)
{
    C2 c;
    CandidateLattice lat = CandidateLattice::symmetric(c.f, {q(c.f, 1)}, "");
    EXPECT_THROW(find_frobenius_involutions(c.fa, lat, 2), CapacityError);
    FrobAlgebra big = nilpotent_algebra(7, field_make(1));
    EXPECT_THROW(find_frobenius_involutions(big, CandidateLattice::symmetric(field_make(1), {}, "")), CapacityError);
}

TEST(SolveTheta, GroupAlgebraC2)
{
    C2 c;
    CandidateLattice lat = CandidateLattice::symmetric(c.f, {c.r2}, "{0,+-sqrt2}");
    ThetaSolutions id = solve_theta(c.fa, c.id, lat);
    std::vector<Vec> expected{c.r2 * c.e, -c.r2 * c.e, c.r2 * c.g, -c.r2 * c.g};
    std::sort(expected.begin(), expected.end(), [](const Vec& a, const Vec& b) { return compare(a, b) < 0; });
    EXPECT_EQ(id.points, expected);
    EXPECT_EQ(id.target, q(c.f, 2) * c.e);
    ThetaSolutions neg = solve_theta(c.fa, c.neg, lat);
    ASSERT_EQ(neg.points.size(), 1u);
    EXPECT_TRUE(neg.points.front().is_zero());
}

TEST(SolveTheta, MatchesDirectEvaluation)
{
    C2 c;
    CandidateLattice lat = CandidateLattice::symmetric(c.f, {q(c.f, 1), c.r2, q(c.f, 2)}, "");
    for (const Mat& phi : {c.id, c.neg}) {
        std::vector<Vec> brute;
        for (const auto& a : lat.values)
            for (const auto& b : lat.values) {
                Vec t(c.f, {a, b});
                if (check_extended(c.ext(phi, t)).passed())
                    brute.push_back(t);
            }
        std::sort(brute.begin(), brute.end(), [](const Vec& x, const Vec& y) { return compare(x, y) < 0; });
        EXPECT_EQ(solve_theta(c.fa, phi, lat).points, brute);
    }
}

TEST(SolveTheta, NilpotentEvenHasNone)
{
    const unsigned n = 4;
    CycField f = field_make(sqrt_conductor(n));
    FrobAlgebra a = nilpotent_algebra(n, f);
    CandidateLattice lat = CandidateLattice::symmetric(f, {q(f, 1), q(f, 2), q(f, 3)}, "");
    EXPECT_TRUE(solve_theta(a, Mat::identity(f, n), lat).points.empty());
}

TEST(SolveTheta, NilpotentOddFamily)
{
    CycField f = field_make(12);
    FrobAlgebra a = nilpotent_algebra(3, f);
    const CycScalar r3 = sqrt_rational(f, 3);
    ThetaSolutions s = solve_theta(a, Mat::identity(f, 3), CandidateLattice::symmetric(f, {q(f, 1), r3}, ""));
    EXPECT_EQ(s.points.size(), 10u);
    ASSERT_EQ(s.families.size(), 2u);
    for (const auto& fam : s.families) {
        ASSERT_EQ(fam.directions.size(), 1u);
        EXPECT_EQ(fam.directions.front(), Vec::basis(f, 3, 2));
        EXPECT_TRUE(fam.basepoint[0].is_zero() && fam.basepoint[2].is_zero());
        EXPECT_EQ(fam.basepoint[1] * fam.basepoint[1], q(f, 3));
    }
}

TEST(Classify, GroundFieldAndComplex)
{
    Classification k = classify_family(catalog_family("k"));
    ASSERT_EQ(k.structures.size(), 2u);
    EXPECT_EQ(k.classes.size(), 2u);
    EXPECT_TRUE(k.unresolved.empty());
    Classification cr = classify_family(catalog_family("CR"));
    EXPECT_EQ(cr.structures.size(), 3u);
    EXPECT_EQ(cr.classes.size(), 3u);
    for (const auto& s : cr.structures)
        EXPECT_TRUE(s.ext.phi.is_identity() || s.ext.theta.is_zero());
}

TEST(Classify, GroupAlgebraC2)
{
    C2 c;
    Classification r = classify_extended(c.fa, catalog_family("kC2").lattice, {c.neg});
    EXPECT_EQ(r.structures.size(), 5u);
    EXPECT_EQ(r.classes.size(), 4u);
    EXPECT_TRUE(r.unresolved.empty());
    for (const auto& s : r.structures) {
        ExtFrobAlgebra e{c.fa, s.ext};
        EXPECT_TRUE(check_extended(e).passed());
        EXPECT_TRUE(check_key_identity(e));
    }
    std::size_t joined = 0;
    for (const auto& l : r.links) {
        EXPECT_EQ(l.via, "witness 0");
        EXPECT_EQ(r.structures[l.from].ext.theta, -r.structures[l.to].ext.theta);
        EXPECT_TRUE(r.structures[l.from].ext.theta[0].is_zero());
        ++joined;
    }
    EXPECT_EQ(joined, 2u);
}

TEST(Classify, WithoutSearchLeavesUnresolved)
{
    C2 c;
    ClassifyOptions opts;
    opts.witness_search = false;
    Classification r = classify_extended(c.fa, catalog_family("kC2").lattice, {}, opts);
    EXPECT_EQ(r.classes.size(), 5u);
    ASSERT_EQ(r.unresolved.size(), 1u);
}

TEST(Classify, RejectsZeroDimension)
{
    CycField f = field_make(1);
    FrobAlgebra z{AlgebraData{f, 0, {}, Mat(f, 0, 0), Vec(f, 0)}, CoalgebraData{f, 0, Mat(f, 0, 0), Mat(f, 1, 0)}};
    EXPECT_THROW(classify_extended(z, CandidateLattice::symmetric(f, {}, "")), PreconditionError);
}

TEST(Classify, LargerLatticeAddsNothingForC2)
{
    C2 c;
    Family fam = catalog_family("kC2");
    CandidateLattice bigger = fam.lattice.united(
        CandidateLattice::symmetric(c.f, {q(c.f, 2), CycScalar(c.f, Rational(1, 2)), c.r2 * CycScalar(c.f, Rational(1, 2))}, ""),
        "");
    for (const Mat& phi : {c.id, c.neg})
        EXPECT_EQ(solve_theta(c.fa, phi, fam.lattice).points, solve_theta(c.fa, phi, bigger).points);
}

TEST(Budget, EnvironmentOverride)
{
    ::setenv("FROBEX_BUDGET", "3", 1);
    EXPECT_EQ(default_budget(), 3u);
    C2 c;
    EXPECT_THROW(solve_theta(c.fa, c.id, CandidateLattice::symmetric(c.f, {c.r2}, "")), CapacityError);
    ::unsetenv("FROBEX_BUDGET");
    EXPECT_GT(default_budget(), 1000u);
}
