#ifndef FROBEX_FROBENIUS_HPP
#define FROBEX_FROBENIUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobex/linalg.hpp"
#include "frobex/report.hpp"

namespace frobex {

/// Associative unital algebra: m is d x d^2, u has length d.
struct AlgebraData {
    CycField field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Mat m;
    Vec u;
};

/// Coassociative counital coalgebra: delta is d^2 x d, eps is 1 x d.
struct CoalgebraData {
    CycField field;
    std::size_t dim = 0;
    Mat delta;
    Mat eps;
};

struct FrobAlgebra {
    AlgebraData algebra;
    CoalgebraData coalgebra;

    CycField field() const { return algebra.field; }
    std::size_t dim() const { return algebra.dim; }
    const Mat& m() const { return algebra.m; }
    const Vec& u() const { return algebra.u; }
    const Mat& delta() const { return coalgebra.delta; }
    const Mat& eps() const { return coalgebra.eps; }
    const std::vector<std::string>& labels() const { return algebra.labels; }

    friend bool operator==(const FrobAlgebra& a, const FrobAlgebra& b)
    {
        return a.field() == b.field() && a.dim() == b.dim() && a.m() == b.m() && a.u() == b.u() &&
               a.delta() == b.delta() && a.eps() == b.eps();
    }
};

inline std::vector<std::string> default_labels(std::size_t d)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < d; ++i)
        out.push_back("e" + std::to_string(i));
    return out;
}

namespace detail {

inline std::size_t ipow(std::size_t b, unsigned e)
{
    std::size_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

/// Basis tuple of a tensor index, most significant factor first.
inline std::string tuple_text(std::size_t index, std::size_t d, unsigned arity,
                              const std::vector<std::string>* labels = nullptr)
{
    std::vector<std::size_t> digits(arity);
    for (unsigned k = arity; k-- > 0;) {
        digits[k] = d == 0 ? 0 : index % d;
        index = d == 0 ? 0 : index / d;
    }
    std::string s = "(";
    for (unsigned k = 0; k < arity; ++k) {
        if (k)
            s += ",";
        if (labels && digits[k] < labels->size())
            s += (*labels)[digits[k]];
        else
            s += std::to_string(digits[k]);
    }
    return s + ")";
}

/// Record lhs == rhs in the report; on failure name the first differing input and output basis tuples.
inline void expect_equal(Report& rep, const std::string& name, const Mat& lhs, const Mat& rhs, std::size_t d,
                         unsigned in_arity, unsigned out_arity, const std::vector<std::string>* labels = nullptr)
{
    auto diff = lhs.first_difference(rhs);
    if (!diff) {
        rep.add(name, true);
        return;
    }
    const auto [r, c] = *diff;
    rep.add(name, false,
            "first violation at input " + tuple_text(c, d, in_arity, labels) + ", output component " +
                tuple_text(r, d, out_arity, labels) + ": " + lhs.at(r, c).to_string() + " vs " +
                rhs.at(r, c).to_string());
}

inline void expect_equal_vec(Report& rep, const std::string& name, const Vec& lhs, const Vec& rhs)
{
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] != rhs[i]) {
            rep.add(name, false,
                    "first violation at component " + std::to_string(i) + ": " + lhs[i].to_string() + " vs " +
                        rhs[i].to_string());
            return;
        }
    }
    rep.add(name, true);
}

inline void require_shape(const Mat& m, std::size_t r, std::size_t c, const std::string& what)
{
    if (m.rows() != r || m.cols() != c)
        throw ShapeMismatch(what + " has shape " + m.shape() + ", expected " + std::to_string(r) + "x" +
                            std::to_string(c));
}

} // namespace detail

inline void validate_shapes(const AlgebraData& a)
{
    const std::size_t d = a.dim;
    detail::require_shape(a.m, d, d * d, "m");
    if (a.u.size() != d)
        throw ShapeMismatch("u has length " + std::to_string(a.u.size()) + ", expected " + std::to_string(d));
    require_same_field(a.field, a.m.field());
    require_same_field(a.field, a.u.field());
}

inline void validate_shapes(const CoalgebraData& c)
{
    const std::size_t d = c.dim;
    detail::require_shape(c.delta, d * d, d, "delta");
    detail::require_shape(c.eps, 1, d, "eps");
    require_same_field(c.field, c.delta.field());
    require_same_field(c.field, c.eps.field());
}

inline void validate_shapes(const FrobAlgebra& fa)
{
    validate_shapes(fa.algebra);
    validate_shapes(fa.coalgebra);
    require_same_field(fa.algebra.field, fa.coalgebra.field);
    if (fa.algebra.dim != fa.coalgebra.dim)
        throw ShapeMismatch("algebra and coalgebra dimensions differ");
}

/// Product x * y.
inline Vec multiply(const AlgebraData& a, const Vec& x, const Vec& y) { return a.m * kron(x, y); }

/// Matrix of left multiplication by x.
inline Mat left_mult(const AlgebraData& a, const Vec& x)
{
    return a.m * kron(Mat::column(x), Mat::identity(a.field, a.dim));
}

/// Matrix of right multiplication by x.
inline Mat right_mult(const AlgebraData& a, const Vec& x)
{
    return a.m * kron(Mat::identity(a.field, a.dim), Mat::column(x));
}

inline Report check_algebra(const AlgebraData& a)
{
    validate_shapes(a);
    const std::size_t d = a.dim;
    const Mat id = Mat::identity(a.field, d);
    Report rep;
    detail::expect_equal(rep, "associativity", a.m * kron(a.m, id), a.m * kron(id, a.m), d, 3, 1, &a.labels);
    const Mat uc = Mat::column(a.u);
    detail::expect_equal(rep, "unitality.left", a.m * kron(uc, id), id, d, 1, 1, &a.labels);
    detail::expect_equal(rep, "unitality.right", a.m * kron(id, uc), id, d, 1, 1, &a.labels);
    return rep;
}

inline Report check_coalgebra(const CoalgebraData& c, const std::vector<std::string>* labels = nullptr)
{
    validate_shapes(c);
    const std::size_t d = c.dim;
    const Mat id = Mat::identity(c.field, d);
    Report rep;
    detail::expect_equal(rep, "coassociativity", kron(c.delta, id) * c.delta, kron(id, c.delta) * c.delta, d, 1, 3,
                         labels);
    detail::expect_equal(rep, "counitality.left", kron(c.eps, id) * c.delta, id, d, 1, 1, labels);
    detail::expect_equal(rep, "counitality.right", kron(id, c.eps) * c.delta, id, d, 1, 1, labels);
    return rep;
}

/// Algebra, coalgebra and the Frobenius law (m x I)(I x D) = D m = (I x m)(D x I), all three pairs.
inline Report check_frobenius(const FrobAlgebra& fa)
{
    validate_shapes(fa);
    Report rep = check_algebra(fa.algebra);
    rep.merge(check_coalgebra(fa.coalgebra, &fa.algebra.labels));
    const std::size_t d = fa.dim();
    const Mat id = Mat::identity(fa.field(), d);
    const Mat left = kron(fa.m(), id) * kron(id, fa.delta());
    const Mat middle = fa.delta() * fa.m();
    const Mat right = kron(id, fa.m()) * kron(fa.delta(), id);
    const auto* labels = &fa.algebra.labels;
    detail::expect_equal(rep, "frobenius_law.left_middle", left, middle, d, 2, 2, labels);
    detail::expect_equal(rep, "frobenius_law.middle_right", middle, right, d, 2, 2, labels);
    detail::expect_equal(rep, "frobenius_law.left_right", left, right, d, 2, 2, labels);
    return rep;
}

/// Delta(x) = (m x I)(x (x) delta_one), column by column.
inline Mat delta_from_delta_one(const AlgebraData& a, const Vec& delta_one)
{
    validate_shapes(a);
    const std::size_t d = a.dim;
    if (delta_one.size() != d * d)
        throw ShapeMismatch("delta_one must have length d^2");
    const Mat id = Mat::identity(a.field, d);
    return kron(a.m, id) * kron(id, Mat::column(delta_one));
}

enum class CounitStatus { unique, non_unique, inconsistent };

struct CounitSolution {
    CounitStatus status = CounitStatus::inconsistent;
    std::optional<Mat> eps; // a particular solution when consistent
    std::size_t nullity = 0;
};

/// Solve (eps x I) Delta = I = (I x eps) Delta for eps.
inline CounitSolution solve_counit(CycField f, std::size_t d, const Mat& delta)
{
    detail::require_shape(delta, d * d, d, "delta");
    Mat a(f, 2 * d * d, d);
    Vec b(f, 2 * d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t x = 0; x < d; ++x) {
            const std::size_t left = r * d + x, right = d * d + r * d + x;
            for (std::size_t p = 0; p < d; ++p) {
                a.set(left, p, delta.at(p * d + r, x));
                a.set(right, p, delta.at(r * d + p, x));
            }
            if (r == x) {
                b[left] = CycScalar(f, 1L);
                b[right] = CycScalar(f, 1L);
            }
        }
    }
    CounitSolution out;
    auto sol = solve_linear(a, b);
    if (!sol)
        return out;
    out.eps = Mat::row(sol->solution);
    out.nullity = sol->nullspace.size();
    out.status = out.nullity == 0 ? CounitStatus::unique : CounitStatus::non_unique;
    return out;
}

/// Frobenius algebra from an algebra and Delta(1). Without eps, the counit is solved and must be unique.
inline FrobAlgebra make_frobenius(AlgebraData a, const Vec& delta_one, std::optional<Mat> eps = std::nullopt)
{
    if (a.labels.empty())
        a.labels = default_labels(a.dim);
    Mat delta = delta_from_delta_one(a, delta_one);
    if (!eps) {
        CounitSolution s = solve_counit(a.field, a.dim, delta);
        if (s.status == CounitStatus::inconsistent)
            throw PreconditionError("counitality has no solution for this Delta(1)");
        if (s.status == CounitStatus::non_unique)
            throw PreconditionError("counit is not unique (nullity " + std::to_string(s.nullity) + ")");
        eps = *s.eps;
    }
    FrobAlgebra fa{std::move(a), CoalgebraData{}};
    fa.coalgebra = CoalgebraData{fa.algebra.field, fa.algebra.dim, std::move(delta), std::move(*eps)};
    return fa;
}

/// True iff m Delta = I.
inline bool check_separable(const FrobAlgebra& fa)
{
    validate_shapes(fa);
    return (fa.m() * fa.delta()).is_identity();
}

/// The bilinear form eps(a b) as a d x d matrix.
inline Mat pairing(const FrobAlgebra& fa)
{
    const Mat em = fa.eps() * fa.m();
    const std::size_t d = fa.dim();
    Mat p(fa.field(), d, d);
    for (const auto& [j, v] : em.row_entries(0))
        p.set(j / d, j % d, v);
    return p;
}

/// Replace (Delta, eps) by (c Delta, eps / c); the result is again Frobenius.
inline FrobAlgebra rescale_comultiplication(FrobAlgebra fa, const CycScalar& c)
{
    fa.coalgebra.delta = c * fa.coalgebra.delta;
    fa.coalgebra.eps = c.inverse() * fa.coalgebra.eps;
    return fa;
}

/// The unit Frobenius algebra k.
inline FrobAlgebra unit_frobenius(CycField f)
{
    AlgebraData a{f, 1, {"1"}, Mat::identity(f, 1), Vec::basis(f, 1, 0)};
    return make_frobenius(std::move(a), Vec::basis(f, 1, 0), Mat::identity(f, 1));
}

} // namespace frobex

#endif // FROBEX_FROBENIUS_HPP
