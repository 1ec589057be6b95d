#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "frobex/scalars.hpp"

using namespace frobex;

namespace {

// Independent oracle: Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}, with small integer polynomials.
int mobius(unsigned n)
{
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            mu = -mu;
        }
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

std::vector<long long> mobius_cyclotomic(unsigned n)
{
    std::vector<long long> num{1}, den{1};
    auto mul_binomial = [](std::vector<long long>& p, unsigned d) {
        std::vector<long long> r(p.size() + d, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            r[i + d] += p[i];
            r[i] -= p[i];
        }
        p = r;
    };
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        int mu = mobius(n / d);
        if (mu == 1)
            mul_binomial(num, d);
        else if (mu == -1)
            mul_binomial(den, d);
    }
    // long division num / den, den has leading coefficient +-1
    const long dn = static_cast<long>(den.size()) - 1;
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (long k = static_cast<long>(num.size()) - 1; k >= dn; --k) {
        long long c = num[k] / den.back();
        q[k - dn] = c;
        for (long j = 0; j <= dn; ++j)
            num[k - dn + j] -= c * den[j];
    }
    for (long long c : num)
        EXPECT_EQ(c, 0);
    return q;
}

std::complex<double> numeric(const CycScalar& s)
{
    const double pi = 3.14159265358979323846;
    const unsigned n = s.field().conductor();
    std::complex<double> z = std::polar(1.0, 2 * pi / n), acc = 0, p = 1;
    for (std::size_t k = 0; k < s.field().degree(); ++k) {
        acc += s.coeff(k).convert_to<double>() * p;
        p *= z;
    }
    return acc;
}

CycScalar random_scalar(CycField f, std::mt19937_64& rng, bool nonzero = false)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    while (true) {
        std::vector<Rational> c(f.degree());
        for (auto& x : c)
            x = Rational(num(rng), den(rng));
        CycScalar s = CycScalar::from_coeffs(f, c);
        if (!nonzero || !s.is_zero())
            return s;
    }
}

const std::vector<unsigned> kConductors{1, 2, 3, 4, 8, 12, 24};

} // namespace

TEST(Field, TrivialConductorIsRationals)
{
    CycField q = field_make(1);
    EXPECT_EQ(q.degree(), 1u);
    ASSERT_EQ(q.min_poly().size(), 2u);
    EXPECT_EQ(q.min_poly()[0], -1);
    EXPECT_EQ(q.min_poly()[1], 1);
}

TEST(Field, KnownCyclotomicPolynomials)
{
    CycField f8 = field_make(8);
    EXPECT_EQ(f8.degree(), 4u);
    EXPECT_EQ(f8.min_poly(), (detail::IntPoly{1, 0, 0, 0, 1}));
    CycField f12 = field_make(12);
    EXPECT_EQ(f12.degree(), 4u);
    EXPECT_EQ(f12.min_poly(), (detail::IntPoly{1, 0, -1, 0, 1}));
}

TEST(Field, DivisionAgreesWithMobiusProduct)
{
    for (unsigned n = 1; n <= 60; ++n) {
        auto expect = mobius_cyclotomic(n);
        const auto& got = field_make(n).min_poly();
        ASSERT_EQ(got.size(), expect.size()) << "n=" << n;
        for (std::size_t k = 0; k < got.size(); ++k)
            EXPECT_EQ(got[k], expect[k]) << "n=" << n << " k=" << k;
    }
}

TEST(Field, CapIsEnforced)
{
    EXPECT_THROW(field_make(121), CapacityError);
    EXPECT_THROW(field_make(0), FieldError);
    EXPECT_NO_THROW(field_make(120));
    EXPECT_EQ(field_make(120).degree(), 32u);
}

TEST(Arith, RootOfUnityRelations)
{
    CycField f = field_make(8);
    CycScalar z = CycScalar::zeta(f, 1);
    EXPECT_EQ(z * CycScalar::zeta(f, 3), CycScalar(f, -1L));
    CycField f12 = field_make(12);
    CycScalar a = CycScalar(f12, 1L) + CycScalar::zeta(f12, 1);
    EXPECT_TRUE((a / a).is_one());
}

TEST(Arith, InverseOfSqrtThree)
{
    CycField f = field_make(12);
    CycScalar r3 = sqrt_rational(f, 3);
    CycScalar x = r3.inverse() * CycScalar(f, 3L);
    EXPECT_EQ(x, r3);
    EXPECT_EQ(x * x, CycScalar(f, 3L));
}

TEST(Arith, MismatchedFieldsThrow)
{
    CycScalar a(field_make(8), 1L), b(field_make(12), 1L);
    EXPECT_THROW(a + b, FieldMismatch);
    EXPECT_THROW(a * b, FieldMismatch);
    EXPECT_THROW(CycScalar(field_make(8)).inverse(), DivisionByZero);
}

TEST(Arith, FieldAxiomsOnRandomTriples)
{
    std::mt19937_64 rng(20240611);
    for (unsigned n : kConductors) {
        CycField f = field_make(n);
        for (int t = 0; t < 60; ++t) {
            CycScalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a + b, b + a);
            EXPECT_TRUE((a - a).is_zero());
        }
    }
}

TEST(Arith, InverseOnRandomScalars)
{
    std::mt19937_64 rng(7);
    for (unsigned n : kConductors) {
        CycField f = field_make(n);
        for (int t = 0; t < 200; ++t) {
            CycScalar a = random_scalar(f, rng, true);
            EXPECT_TRUE((a * a.inverse()).is_one()) << "N=" << n << " a=" << a;
        }
    }
}

TEST(Arith, NumericEvaluationIsMultiplicative)
{
    std::mt19937_64 rng(11);
    CycField f = field_make(24);
    for (int t = 0; t < 40; ++t) {
        CycScalar a = random_scalar(f, rng), b = random_scalar(f, rng);
        EXPECT_LT(std::abs(numeric(a * b) - numeric(a) * numeric(b)), 1e-9);
    }
}

TEST(Embed, Examples)
{
    CycField f2 = field_make(2), f8 = field_make(8), f3 = field_make(3), f12 = field_make(12), f24 = field_make(24);
    EXPECT_EQ(embed(CycScalar(f2, -1L), f8), CycScalar::zeta(f8, 4));
    EXPECT_EQ(embed(CycScalar::zeta(f3, 1), f12), CycScalar::zeta(f12, 4));
    CycScalar r2 = embed(sqrt_rational(f8, 2), f24);
    EXPECT_EQ(r2 * r2, embed(CycScalar(f8, 2L), f24));
    EXPECT_THROW(embed(CycScalar::zeta(f3, 1), f8), FieldError);
}

TEST(Embed, HomomorphismAndInjectivity)
{
    std::mt19937_64 rng(3);
    CycField src = field_make(12), dst = field_make(24);
    for (int t = 0; t < 50; ++t) {
        CycScalar a = random_scalar(src, rng), b = random_scalar(src, rng);
        EXPECT_EQ(embed(a * b, dst), embed(a, dst) * embed(b, dst));
        EXPECT_EQ(embed(a + b, dst), embed(a, dst) + embed(b, dst));
        EXPECT_EQ(a == b, embed(a, dst) == embed(b, dst));
    }
    EXPECT_TRUE(embed(CycScalar(src, 1L), dst).is_one());
}

TEST(RootOfUnity, PowersAreOne)
{
    for (unsigned n : kConductors) {
        CycField f = field_make(n);
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0)
                continue;
            for (long k = -2; k <= static_cast<long>(d); ++k) {
                CycScalar w = root_of_unity(f, d, k), p(f, 1L);
                for (unsigned i = 0; i < d; ++i)
                    p *= w;
                EXPECT_TRUE(p.is_one());
            }
        }
    }
    CycField f12 = field_make(12);
    CycScalar i = root_of_unity(f12, 4, 1);
    EXPECT_EQ(i * i, CycScalar(f12, -1L));
    EXPECT_EQ(root_of_unity(field_make(3), 2, 1), CycScalar(field_make(3), -1L));
    EXPECT_THROW(root_of_unity(field_make(8), 3, 1), FieldError);
}

TEST(Sqrt, GaussSumConstruction)
{
    CycField f8 = field_make(8);
    EXPECT_EQ(sqrt_rational(f8, 2), CycScalar::zeta(f8, 1) + CycScalar::zeta(f8, 7));
    EXPECT_TRUE(sqrt_rational(field_make(1), 1).is_one());
    EXPECT_EQ(sqrt_rational(field_make(1), 4), CycScalar(field_make(1), 2L));
    EXPECT_THROW(sqrt_rational(field_make(4), 2), FieldError);
    EXPECT_EQ(sqrt_conductor(2), 8u);
    EXPECT_EQ(sqrt_conductor(3), 12u);
    EXPECT_EQ(sqrt_conductor(5), 5u);
    EXPECT_EQ(sqrt_conductor(6), 24u);
    EXPECT_EQ(sqrt_conductor(9), 1u);
}

TEST(Sqrt, SquaresAndPositiveSign)
{
    for (unsigned n = 1; n <= 30; ++n) {
        CycField f = field_make(sqrt_conductor(n));
        CycScalar r = sqrt_rational(f, n);
        EXPECT_EQ(r * r, CycScalar(f, static_cast<long>(n)));
        auto v = numeric(r);
        EXPECT_NEAR(v.real(), std::sqrt(static_cast<double>(n)), 1e-9) << n;
        EXPECT_NEAR(v.imag(), 0.0, 1e-9);
    }
}

TEST(Text, PrintFormat)
{
    CycField f8 = field_make(8);
    CycScalar s = CycScalar::from_coeffs(f8, {Rational(-2), 0, 0, Rational(1, 2)});
    EXPECT_EQ(s.to_string(), "1/2*z^3 - 2");
    EXPECT_EQ(CycScalar(f8).to_string(), "0");
    EXPECT_EQ((-CycScalar::zeta(f8, 1)).to_string(), "-z^1");
    EXPECT_EQ(format_scalar_with_field(sqrt_rational(f8, 2)), "Q(zeta_8): -z^3 + z^1");
}

TEST(Text, ParseExamples)
{
    CycScalar a = parse_scalar_with_field("Q(zeta_8): z^1 + z^7");
    EXPECT_EQ(a, sqrt_rational(field_make(8), 2));
    CycField f8 = field_make(8);
    EXPECT_EQ(parse_scalar(f8, "1/2*z^3 - 2"), CycScalar::from_coeffs(f8, {Rational(-2), 0, 0, Rational(1, 2)}));
    EXPECT_EQ(parse_scalar(f8, "z"), CycScalar::zeta(f8, 1));
    EXPECT_EQ(parse_scalar(f8, "-3/6"), CycScalar(f8, Rational(-1, 2)));
    EXPECT_THROW(parse_scalar(f8, ""), ParseError);
    EXPECT_THROW(parse_scalar(f8, "1 +"), ParseError);
    EXPECT_THROW(parse_scalar(f8, "1/0"), ParseError);
    EXPECT_THROW(parse_scalar(f8, "2 3"), ParseError);
    EXPECT_THROW(parse_scalar_with_field("Q(zeta_x): 1"), ParseError);
}

TEST(Text, RoundTripIsExact)
{
    std::mt19937_64 rng(5);
    for (unsigned n : kConductors) {
        CycField f = field_make(n);
        for (int t = 0; t < 50; ++t) {
            CycScalar a = random_scalar(f, rng);
            std::string text = format_scalar_with_field(a);
            CycScalar b = parse_scalar_with_field(text);
            EXPECT_EQ(a, b);
            EXPECT_EQ(format_scalar_with_field(b), text);
        }
    }
}

TEST(Order, LexicographicOnCoefficients)
{
    CycField f = field_make(4);
    CycScalar m1(f, -1L), z(f), one(f, 1L), i = CycScalar::zeta(f, 1);
    EXPECT_LT(compare(m1, z), 0);
    EXPECT_LT(compare(z, one), 0);
    EXPECT_LT(compare(z, i), 0);
    EXPECT_LT(compare(i, one), 0);
    EXPECT_EQ(compare(one, one), 0);
}
