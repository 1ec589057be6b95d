#ifndef FROBEX_EXTENDED_HPP
#define FROBEX_EXTENDED_HPP

#include <atomic>
#include <cstddef>
#include <string>

#include "frobex/frobenius.hpp"

namespace frobex {

/// Extension data: an involution phi (d x d) and an element theta.
struct ExtStructure {
    Mat phi;
    Vec theta;

    friend bool operator==(const ExtStructure& a, const ExtStructure& b)
    {
        return a.phi == b.phi && a.theta == b.theta;
    }
};

struct ExtFrobAlgebra {
    FrobAlgebra frob;
    ExtStructure ext;

    CycField field() const { return frob.field(); }
    std::size_t dim() const { return frob.dim(); }
    const Mat& phi() const { return ext.phi; }
    const Vec& theta() const { return ext.theta; }

    friend bool operator==(const ExtFrobAlgebra& a, const ExtFrobAlgebra& b)
    {
        return a.frob == b.frob && a.ext == b.ext;
    }
};

inline void validate_shapes(const ExtFrobAlgebra& e)
{
    validate_shapes(e.frob);
    detail::require_shape(e.ext.phi, e.dim(), e.dim(), "phi");
    if (e.ext.theta.size() != e.dim())
        throw ShapeMismatch("theta has length " + std::to_string(e.ext.theta.size()));
    require_same_field(e.field(), e.ext.phi.field());
    require_same_field(e.field(), e.ext.theta.field());
}

/// Algebra and coalgebra morphism conditions for f : a -> b.
inline Report check_frobenius_morphism(const FrobAlgebra& a, const FrobAlgebra& b, const Mat& f)
{
    validate_shapes(a);
    validate_shapes(b);
    require_same_field(a.field(), b.field());
    detail::require_shape(f, b.dim(), a.dim(), "morphism");
    Report rep;
    const std::size_t d = a.dim();
    detail::expect_equal(rep, "multiplicative", f * a.m(), b.m() * kron(f, f), d, 2, 1);
    detail::expect_equal_vec(rep, "unit", f * a.u(), b.u());
    detail::expect_equal(rep, "comultiplicative", b.delta() * f, kron(f, f) * a.delta(), d, 1, 2);
    detail::expect_equal(rep, "counit", b.eps() * f, a.eps(), d, 1, 1);
    return rep;
}

/// Conditions (i)-(iii): phi a Frobenius involution, theta phi-invariant under right products,
/// and m(phi x I) Delta u = theta^2.
inline Report check_extended(const ExtFrobAlgebra& e)
{
    validate_shapes(e);
    const FrobAlgebra& fa = e.frob;
    const std::size_t d = e.dim();
    const Mat id = Mat::identity(e.field(), d);
    const Mat& phi = e.ext.phi;
    Report rep;
    rep.merge(check_frobenius_morphism(fa, fa, phi), "i.");
    detail::expect_equal(rep, "i.involution", phi * phi, id, d, 1, 1, &fa.algebra.labels);
    const Mat right_theta = fa.m() * kron(Mat::column(e.ext.theta), id);
    detail::expect_equal(rep, "ii.theta_invariance", phi * right_theta, right_theta, d, 1, 1, &fa.algebra.labels);
    const Vec lhs = fa.m() * (kron(phi, id) * (fa.delta() * fa.u()));
    const Vec rhs = multiply(fa.algebra, e.ext.theta, e.ext.theta);
    detail::expect_equal_vec(rep, "iii.theta_square", lhs, rhs);
    return rep;
}

/// m(phi x I) Delta == m(m(theta x theta) x I) as d x d matrices.
inline bool check_key_identity(const ExtFrobAlgebra& e)
{
    validate_shapes(e);
    const FrobAlgebra& fa = e.frob;
    const Mat id = Mat::identity(e.field(), e.dim());
    const Mat lhs = fa.m() * kron(e.ext.phi, id) * fa.delta();
    const Vec t2 = multiply(fa.algebra, e.ext.theta, e.ext.theta);
    const Mat rhs = fa.m() * kron(Mat::column(t2), id);
    return lhs == rhs;
}

/// (phi, theta) = (I, u) on a separable Frobenius algebra.
inline ExtStructure separable_extension(const FrobAlgebra& fa)
{
    if (!check_separable(fa))
        throw PreconditionError("Frobenius algebra is not separable: m Delta != I");
    return ExtStructure{Mat::identity(fa.field(), fa.dim()), fa.u()};
}

inline bool is_phi_trivial(const ExtFrobAlgebra& e) { return e.ext.phi.is_identity(); }
inline bool is_theta_trivial(const ExtFrobAlgebra& e) { return e.ext.theta.is_zero(); }

/// Counts of morphisms that passed check_ext_morphism, and of those found singular.
struct MorphismAudit {
    std::size_t passed = 0;
    std::size_t singular = 0;
};

namespace detail {
inline std::atomic<std::size_t>& audit_passed()
{
    static std::atomic<std::size_t> n{0};
    return n;
}
inline std::atomic<std::size_t>& audit_singular()
{
    static std::atomic<std::size_t> n{0};
    return n;
}
} // namespace detail

inline MorphismAudit morphism_audit() { return {detail::audit_passed().load(), detail::audit_singular().load()}; }

inline void reset_morphism_audit()
{
    detail::audit_passed() = 0;
    detail::audit_singular() = 0;
}

/// f : src -> dst is a Frobenius morphism with f phi_src = phi_dst f and f theta_src = theta_dst.
/// A passing f is also tested for invertibility; a singular one is reported as a contradiction.
inline Report check_ext_morphism(const ExtFrobAlgebra& src, const ExtFrobAlgebra& dst, const Mat& f)
{
    validate_shapes(src);
    validate_shapes(dst);
    Report rep = check_frobenius_morphism(src.frob, dst.frob, f);
    detail::expect_equal(rep, "phi_intertwining", f * src.ext.phi, dst.ext.phi * f, src.dim(), 1, 1);
    detail::expect_equal_vec(rep, "theta", f * src.ext.theta, dst.ext.theta);
    if (rep.passed()) {
        const bool invertible = f.rows() == f.cols() && rank(f) == f.rows();
        ++detail::audit_passed();
        if (!invertible)
            ++detail::audit_singular();
        rep.add("isomorphism", invertible, invertible ? "" : "contradiction: passing morphism is singular");
    }
    return rep;
}

enum class Obstruction { obstructed, unknown };

/// theta_src a multiple of the unit and different from theta_dst rules out any morphism.
inline Obstruction lemma_no_morphism_obstruction(const ExtFrobAlgebra& src, const ExtFrobAlgebra& dst)
{
    validate_shapes(src);
    validate_shapes(dst);
    const Vec& t = src.ext.theta;
    const Vec& u = src.frob.u();
    std::size_t k = 0;
    while (k < u.size() && u[k].is_zero())
        ++k;
    if (k == u.size())
        return Obstruction::unknown;
    const CycScalar lambda = t[k] / u[k];
    if (lambda * u != t)
        return Obstruction::unknown;
    return t != dst.ext.theta ? Obstruction::obstructed : Obstruction::unknown;
}

} // namespace frobex

#endif // FROBEX_EXTENDED_HPP
