#ifndef FROBEX_HOPF_HPP
#define FROBEX_HOPF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobex/catalog.hpp"
#include "frobex/extended.hpp"

namespace frobex {

/// Hopf algebra with invertible antipode and a normalized integral / cointegral pair.
/// delta_h is d^2 x d, eps_h and lambda are 1 x d.
struct HopfAlgebra {
    CycField field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Mat m;
    Vec u;
    Mat delta_h;
    Mat eps_h;
    Mat S;
    Mat S_inv;
    Vec Lambda;
    Mat lambda;

    AlgebraData algebra() const { return {field, dim, labels, m, u}; }
    CoalgebraData coalgebra() const { return {field, dim, delta_h, eps_h}; }

    friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b)
    {
        return a.field == b.field && a.dim == b.dim && a.m == b.m && a.u == b.u && a.delta_h == b.delta_h &&
               a.eps_h == b.eps_h && a.S == b.S && a.S_inv == b.S_inv && a.Lambda == b.Lambda &&
               a.lambda == b.lambda;
    }
};

inline void validate_shapes(const HopfAlgebra& h)
{
    validate_shapes(h.algebra());
    validate_shapes(h.coalgebra());
    const std::size_t d = h.dim;
    detail::require_shape(h.S, d, d, "S");
    detail::require_shape(h.S_inv, d, d, "S_inv");
    detail::require_shape(h.lambda, 1, d, "lambda");
    if (h.Lambda.size() != d)
        throw ShapeMismatch("Lambda has length " + std::to_string(h.Lambda.size()));
    for (const Mat* x : {&h.S, &h.S_inv, &h.lambda})
        require_same_field(h.field, x->field());
    require_same_field(h.field, h.Lambda.field());
}

/// Group Hopf algebra kG: Delta(g) = g x g, eps(g) = 1, S(g) = g^-1, Lambda = sum h, lambda = delta_e.
inline HopfAlgebra group_hopf(const GroupTable& g, CycField f)
{
    const std::size_t n = g.order;
    const CycScalar one(f, 1L);
    HopfAlgebra h{f, n, g.labels, Mat(f, n, n * n), Vec::basis(f, n, g.identity), Mat(f, n * n, n), Mat(f, 1, n),
                  Mat(f, n, n), Mat(f, n, n), Vec(f, n), Mat::row(Vec::basis(f, n, g.identity))};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            h.m.set(g.mult[a][b], a * n + b, one);
        h.delta_h.set(a * n + a, a, one);
        h.eps_h.set(0, a, one);
        h.S.set(g.inv[a], a, one);
        h.S_inv.set(g.inv[a], a, one);
        h.Lambda[a] = one;
    }
    return h;
}

/// The one-dimensional Hopf algebra k.
inline HopfAlgebra trivial_hopf(CycField f)
{
    HopfAlgebra h = group_hopf(cyclic_group(1), f);
    h.labels = {"1"};
    return h;
}

/// Bialgebra, antipode, the antipode identities and the integral identities.
inline Report check_hopf(const HopfAlgebra& h)
{
    validate_shapes(h);
    const std::size_t d = h.dim;
    const CycField f = h.field;
    const Mat id = Mat::identity(f, d);
    const Mat c = swap_map(d, d, f);
    const Mat uc = Mat::column(h.u);
    const auto* labels = &h.labels;
    Report rep = check_algebra(h.algebra());
    rep.merge(check_coalgebra(h.coalgebra(), labels));
    const Mat middle_swap = kron(kron(id, c), id);
    detail::expect_equal(rep, "bialgebra.delta_multiplicative", h.delta_h * h.m,
                         kron(h.m, h.m) * middle_swap * kron(h.delta_h, h.delta_h), d, 2, 2, labels);
    detail::expect_equal_vec(rep, "bialgebra.delta_unit", h.delta_h * h.u, kron(h.u, h.u));
    detail::expect_equal(rep, "bialgebra.eps_multiplicative", h.eps_h * h.m, kron(h.eps_h, h.eps_h), d, 2, 1, labels);
    detail::expect_equal_vec(rep, "bialgebra.eps_unit", h.eps_h * h.u, Vec(f, {CycScalar(f, 1L)}));
    const Mat ue = uc * h.eps_h;
    detail::expect_equal(rep, "antipode.left", h.m * kron(h.S, id) * h.delta_h, ue, d, 1, 1, labels);
    detail::expect_equal(rep, "antipode.right", h.m * kron(id, h.S) * h.delta_h, ue, d, 1, 1, labels);
    detail::expect_equal(rep, "antipode.inverse_left", h.S_inv * h.S, id, d, 1, 1, labels);
    detail::expect_equal(rep, "antipode.inverse_right", h.S * h.S_inv, id, d, 1, 1, labels);
    detail::expect_equal(rep, "antipode.antimultiplicative", h.S * h.m, h.m * kron(h.S, h.S) * c, d, 2, 1,
                         labels);
    detail::expect_equal_vec(rep, "antipode.unit", h.S * h.u, h.u);
    detail::expect_equal(rep, "antipode.anticomultiplicative", h.delta_h * h.S, c * kron(h.S, h.S) * h.delta_h, d,
                         1, 2, labels);
    detail::expect_equal(rep, "antipode.counit", h.eps_h * h.S, h.eps_h, d, 1, 1, labels);
    detail::expect_equal(rep, "integral.left", h.m * kron(id, Mat::column(h.Lambda)), Mat::column(h.Lambda) * h.eps_h,
                         d, 1, 1, labels);
    detail::expect_equal(rep, "integral.cointegral", kron(h.lambda, id) * h.delta_h, uc * h.lambda, d, 1, 1, labels);
    detail::expect_equal_vec(rep, "integral.normalization", h.lambda * h.Lambda, Vec(f, {CycScalar(f, 1L)}));
    return rep;
}

namespace detail {

inline void require_hopf(const HopfAlgebra& h)
{
    const Report r = check_hopf(h);
    if (!r.passed())
        throw PreconditionError("Hopf axioms fail: " + r.failures().front());
}

/// (m x S)(I x Delta_h Lambda) as a d^2 x d matrix.
inline Mat psi_delta(const HopfAlgebra& h)
{
    const Mat id = Mat::identity(h.field, h.dim);
    return kron(h.m, h.S) * kron(id, Mat::column(h.delta_h * h.Lambda));
}

} // namespace detail

/// Frobenius algebra (m, u, (m x S)(I x Delta_h Lambda), lambda).
inline FrobAlgebra psi(const HopfAlgebra& h)
{
    detail::require_hopf(h);
    return {h.algebra(), {h.field, h.dim, detail::psi_delta(h), h.lambda}};
}

/// (a) (m x S)(I x Delta_h Lambda) = (I x m)(I x S x I)(Delta_h m x I)(I x Lambda x I) Delta_h;
/// (b) lambda S Lambda = 1.
inline Report check_lemma_A1(const HopfAlgebra& h)
{
    validate_shapes(h);
    const std::size_t d = h.dim;
    const Mat id = Mat::identity(h.field, d);
    const Mat rhs = kron(id, h.m) * kron(kron(id, h.S), id) * kron(h.delta_h * h.m, id) *
                    kron(kron(id, Mat::column(h.Lambda)), id) * h.delta_h;
    Report rep;
    detail::expect_equal(rep, "a.delta_expressions", detail::psi_delta(h), rhs, d, 1, 2, &h.labels);
    detail::expect_equal_vec(rep, "b.lambda_S_Lambda", h.lambda * (h.S * h.Lambda),
                             Vec(h.field, {CycScalar(h.field, 1L)}));
    return rep;
}

/// Algebra and coalgebra morphism with f Lambda_h = Lambda_k and lambda_k f = lambda_h.
inline Report check_hopf_morphism(const HopfAlgebra& h, const HopfAlgebra& k, const Mat& f)
{
    validate_shapes(h);
    validate_shapes(k);
    require_same_field(h.field, k.field);
    detail::require_shape(f, k.dim, h.dim, "morphism");
    const std::size_t d = h.dim;
    Report rep;
    detail::expect_equal(rep, "multiplicative", f * h.m, k.m * kron(f, f), d, 2, 1);
    detail::expect_equal_vec(rep, "unit", f * h.u, k.u);
    detail::expect_equal(rep, "comultiplicative", k.delta_h * f, kron(f, f) * h.delta_h, d, 1, 2);
    detail::expect_equal(rep, "counit", k.eps_h * f, h.eps_h, d, 1, 1);
    detail::expect_equal_vec(rep, "integral", f * h.Lambda, k.Lambda);
    detail::expect_equal(rep, "cointegral", k.lambda * f, h.lambda, d, 1, 1);
    return rep;
}

/// Frobenius morphism check of f : psi(h) -> psi(k) for an integral Hopf morphism f.
inline Report check_psi_morphism(const HopfAlgebra& h, const HopfAlgebra& k, const Mat& f)
{
    const Report pre = check_hopf_morphism(h, k, f);
    if (!pre.passed())
        throw PreconditionError("not an integral Hopf morphism: " + pre.failures().front());
    return check_frobenius_morphism(psi(h), psi(k), f);
}

/// Both sides of m(theta x theta) = u eps_h(Lambda), and the extension (psi(h), I, theta) when they agree.
struct ThetaExtensionResult {
    std::optional<ExtFrobAlgebra> extension;
    Vec theta_square;
    Vec unit_side;

    bool matched() const { return extension.has_value(); }
};

inline ThetaExtensionResult integral_theta_extension(const HopfAlgebra& h, const Vec& theta)
{
    detail::require_hopf(h);
    if (theta.size() != h.dim)
        throw ShapeMismatch("theta has length " + std::to_string(theta.size()));
    require_same_field(h.field, theta.field());
    ThetaExtensionResult out{std::nullopt, h.m * kron(theta, theta), (h.eps_h * h.Lambda)[0] * h.u};
    if (out.theta_square == out.unit_side)
        out.extension = ExtFrobAlgebra{psi(h), {Mat::identity(h.field, h.dim), theta}};
    return out;
}

/// (i) phi an integral Hopf involution, (ii) phi m(theta x I) = m(theta x I), (iii) m(phi x S) Delta_h Lambda = theta^2.
inline Report check_extended_hopf(const HopfAlgebra& h, const Mat& phi, const Vec& theta)
{
    detail::require_hopf(h);
    const std::size_t d = h.dim;
    detail::require_shape(phi, d, d, "phi");
    if (theta.size() != d)
        throw ShapeMismatch("theta has length " + std::to_string(theta.size()));
    require_same_field(h.field, phi.field());
    require_same_field(h.field, theta.field());
    const Mat id = Mat::identity(h.field, d);
    Report rep;
    rep.merge(check_hopf_morphism(h, h, phi), "i.");
    detail::expect_equal(rep, "i.involution", phi * phi, id, d, 1, 1, &h.labels);
    const Mat right_theta = h.m * kron(Mat::column(theta), id);
    detail::expect_equal(rep, "ii.theta_invariance", phi * right_theta, right_theta, d, 1, 1, &h.labels);
    detail::expect_equal_vec(rep, "iii.theta_square", h.m * (kron(phi, h.S) * (h.delta_h * h.Lambda)),
                             h.m * kron(theta, theta));
    return rep;
}

/// (psi(h), phi, theta) for an extended Hopf algebra.
inline ExtFrobAlgebra ext_hopf_to_ext_frob(const HopfAlgebra& h, const Mat& phi, const Vec& theta)
{
    const Report r = check_extended_hopf(h, phi, theta);
    if (!r.passed())
        throw PreconditionError("not an extended Hopf algebra: " + r.failures().front());
    return {psi(h), {phi, theta}};
}

} // namespace frobex

#endif // FROBEX_HOPF_HPP
