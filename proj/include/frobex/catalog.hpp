#ifndef FROBEX_CATALOG_HPP
#define FROBEX_CATALOG_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "frobex/search.hpp"

namespace frobex {

/// Finite group given by its multiplication table.
struct GroupTable {
    std::string name;
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> mult;
    std::vector<std::size_t> inv;
    std::size_t identity = 0;
    std::vector<std::string> labels;

    /// Validates associativity, identity and inverses.
    static GroupTable make(std::string name, std::vector<std::vector<std::size_t>> mult,
                           std::vector<std::string> labels = {})
    {
        const std::size_t n = mult.size();
        if (n == 0)
            throw PreconditionError("group table is empty");
        for (const auto& row : mult) {
            if (row.size() != n)
                throw PreconditionError("group table is not square");
            for (std::size_t v : row)
                if (v >= n)
                    throw PreconditionError("group table entry out of range");
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                        throw PreconditionError("group table is not associative");
        std::optional<std::size_t> id;
        for (std::size_t e = 0; e < n && !id; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n; ++a)
                ok = ok && mult[e][a] == a && mult[a][e] == a;
            if (ok)
                id = e;
        }
        if (!id)
            throw PreconditionError("group table has no identity");
        std::vector<std::size_t> inv(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (mult[a][b] == *id && mult[b][a] == *id)
                    inv[a] = b;
        if (std::find(inv.begin(), inv.end(), n) != inv.end())
            throw PreconditionError("group table lacks inverses");
        if (labels.empty())
            for (std::size_t a = 0; a < n; ++a)
                labels.push_back("h" + std::to_string(a));
        if (labels.size() != n)
            throw PreconditionError("group labels do not match the order");
        return {std::move(name), n, std::move(mult), std::move(inv), *id, std::move(labels)};
    }
};

/// C_n with basis e, g, g^2, ...
inline GroupTable cyclic_group(std::size_t n)
{
    if (n == 0)
        throw PreconditionError("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    }
    return GroupTable::make("C" + std::to_string(n), std::move(t), std::move(labels));
}

/// G x H with index i |H| + j.
inline GroupTable product_group(const GroupTable& g, const GroupTable& h)
{
    const std::size_t n = g.order * h.order;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("(" + g.labels[a / h.order] + "," + h.labels[a % h.order] + ")");
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = g.mult[a / h.order][b / h.order] * h.order + h.mult[a % h.order][b % h.order];
    }
    return GroupTable::make(g.name + "x" + h.name, std::move(t), std::move(labels));
}

/// C2 x C2 with basis e, g1, g2, g3 and g1 g2 = g3.
inline GroupTable klein_four_group()
{
    GroupTable k = product_group(cyclic_group(2), cyclic_group(2));
    k.name = "C2xC2";
    k.labels = {"e", "g1", "g2", "g3"};
    return k;
}

/// S3 as permutations of {0,1,2} in lexicographic order.
inline GroupTable symmetric_group_3()
{
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("[" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
                         std::to_string(perms[a][2]) + "]");
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> c(3);
            for (std::size_t k = 0; k < 3; ++k)
                c[k] = perms[a][perms[b][k]];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return GroupTable::make("S3", std::move(t), std::move(labels));
}

/// kG with Delta(e) = sum h x h^-1 and eps = delta_e.
inline FrobAlgebra group_algebra(const GroupTable& g, CycField f)
{
    const std::size_t n = g.order;
    const CycScalar one(f, 1L);
    Mat m(f, n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            m.set(g.mult[a][b], a * n + b, one);
    AlgebraData a{f, n, g.labels, std::move(m), Vec::basis(f, n, g.identity)};
    Vec d1(f, n * n);
    for (std::size_t h = 0; h < n; ++h)
        d1[h * n + g.inv[h]] = one;
    return make_frobenius(std::move(a), d1, Mat::row(Vec::basis(f, n, g.identity)));
}

/// (kG, id, sign sqrt|G| e).
inline ExtFrobAlgebra group_phi_trivial_extension(const GroupTable& g, int sign, CycField f)
{
    FrobAlgebra fa = group_algebra(g, f);
    const CycScalar s = CycScalar(f, static_cast<long>(sign < 0 ? -1 : 1)) *
                        sqrt_rational(f, static_cast<unsigned>(g.order));
    Vec theta = s * fa.u();
    return {fa, {Mat::identity(f, g.order), theta}};
}

/// kC_n with phi(g) = w g^-1 and theta = sign (1/sqrt n) sum_j w^j g^-2j, where w = zeta_n^k.
inline ExtFrobAlgebra cyclic_extended(std::size_t n, long k, int sign, CycField f)
{
    if (n < 2)
        throw PreconditionError("cyclic_extended requires n >= 2");
    const GroupTable g = cyclic_group(n);
    FrobAlgebra fa = group_algebra(g, f);
    const CycScalar w = root_of_unity(f, static_cast<unsigned>(n), k);
    const CycScalar scale =
        CycScalar(f, static_cast<long>(sign < 0 ? -1 : 1)) * sqrt_rational(f, static_cast<unsigned>(n)).inverse();
    Mat phi(f, n, n);
    Vec theta(f, n);
    CycScalar wj(f, 1L);
    for (std::size_t j = 0; j < n; ++j) {
        phi.set((n - j) % n, j, wj);
        theta[(2 * n - (2 * j) % n) % n] += scale * wj;
        wj *= w;
    }
    return {fa, {phi, theta}};
}

/// k[x]/(x^n) with Delta(1) = sum x^i x x^(n-1-i) and eps dual to x^(n-1).
inline FrobAlgebra nilpotent_algebra(std::size_t n, CycField f)
{
    if (n < 1)
        throw PreconditionError("nilpotent_algebra requires n >= 1");
    const CycScalar one(f, 1L);
    Mat m(f, n, n * n);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "1" : a == 1 ? "x" : "x^" + std::to_string(a));
        for (std::size_t b = 0; a + b < n; ++b)
            m.set(a + b, a * n + b, one);
    }
    AlgebraData a{f, n, std::move(labels), std::move(m), Vec::basis(f, n, 0)};
    Vec d1(f, n * n);
    for (std::size_t i = 0; i < n; ++i)
        d1[i * n + (n - 1 - i)] = one;
    return make_frobenius(std::move(a), d1, Mat::row(Vec::basis(f, n, n - 1)));
}

namespace detail {

inline std::string taft_label(std::size_t i, std::size_t j)
{
    std::string s;
    if (i > 0)
        s += i == 1 ? "g" : "g^" + std::to_string(i);
    if (j > 0)
        s += j == 1 ? "x" : "x^" + std::to_string(j);
    return s.empty() ? std::string("1") : s;
}

/// Algebra T_n(w) with basis g^i x^j at index i n + j.
inline AlgebraData taft_product(std::size_t n, long k, CycField f)
{
    if (n < 2)
        throw PreconditionError("taft_algebra requires n >= 2");
    const long kk = ((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    if (std::gcd(static_cast<std::size_t>(kk), n) != 1)
        throw PreconditionError("taft_algebra requires a primitive root of unity");
    const CycScalar w_inv = root_of_unity(f, static_cast<unsigned>(n), kk).inverse();
    const std::size_t d = n * n;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            labels.push_back(taft_label(i, j));
    std::vector<CycScalar> w_inv_pow(n * n, CycScalar(f, 1L));
    for (std::size_t p = 1; p < n * n; ++p)
        w_inv_pow[p] = w_inv_pow[p - 1] * w_inv;
    Mat m(f, d, d * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (j + b < n)
                        m.set(((i + a) % n) * n + (j + b), (i * n + j) * d + (a * n + b), w_inv_pow[j * a]);
    return {f, d, std::move(labels), std::move(m), Vec::basis(f, d, 0)};
}

} // namespace detail

/// The listed element sum_j (-w^j g^(j+1) x g^-(j+1) x + g^j x x g^-j) of T_n(w) (x) T_n(w).
inline Vec taft_listed_delta_one(std::size_t n, long k, CycField f)
{
    const std::size_t d = n * n;
    const CycScalar w = root_of_unity(f, static_cast<unsigned>(n), k);
    Vec d1(f, d * d);
    CycScalar wj(f, 1L);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t gj1 = (j + 1) % n;
        const std::size_t ginv = (n - gj1) % n;
        d1[(gj1 * n) * d + (ginv * n + 1)] += -wj;
        d1[(j * n + 1) * d + ((n - j) % n) * n] += CycScalar(f, 1L);
        wj *= w;
    }
    return d1;
}

/// Taft algebra T_n(w), w = zeta_n^k primitive, basis g^i x^j at index i n + j.
/// The counit is lambda(g^i x^j) = delta_(i,0) delta_(j,n-1) and Delta(1) is its dual basis element.
inline FrobAlgebra taft_algebra(std::size_t n, long k, CycField f)
{
    AlgebraData alg = detail::taft_product(n, k, f);
    const std::size_t d = alg.dim;
    const Vec lambda = Vec::basis(f, d, n - 1);
    const Mat em = Mat::row(lambda) * alg.m;
    Mat p(f, d, d);
    for (const auto& [j, v] : em.row_entries(0))
        p.set(j / d, j % d, v);
    auto pinv = inverse(p);
    if (!pinv)
        throw PreconditionError("Taft pairing is degenerate");
    Vec d1(f, d * d);
    for (std::size_t b = 0; b < d; ++b)
        for (const auto& [c, v] : pinv->row_entries(b))
            d1[b * d + c] = v;
    return make_frobenius(std::move(alg), d1, Mat::row(lambda));
}

/// Mat_n with basis E_ij at index i n + j, Delta(E_ij) = sum_l E_il x E_lj, eps = trace.
inline FrobAlgebra matrix_frobenius(std::size_t n, CycField f)
{
    if (n < 1)
        throw PreconditionError("matrix algebra requires n >= 1");
    const std::size_t d = n * n;
    const CycScalar one(f, 1L);
    Mat m(f, d, d * d);
    std::vector<std::string> labels;
    Vec u(f, d);
    for (std::size_t i = 0; i < n; ++i) {
        u[i * n + i] = one;
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            for (std::size_t l = 0; l < n; ++l)
                m.set(i * n + l, (i * n + j) * d + (j * n + l), one);
        }
    }
    AlgebraData a{f, d, std::move(labels), std::move(m), u};
    Vec d1(f, d * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            d1[(i * n + l) * d + (l * n + i)] = one;
    return make_frobenius(std::move(a), d1);
}

/// (Mat_n, id, sign sqrt(n) I_n).
inline ExtFrobAlgebra matrix_algebra(std::size_t n, CycField f, int sign = 1)
{
    FrobAlgebra fa = matrix_frobenius(n, f);
    const CycScalar s =
        CycScalar(f, static_cast<long>(sign < 0 ? -1 : 1)) * sqrt_rational(f, static_cast<unsigned>(n));
    Vec theta = s * fa.u();
    return {fa, {Mat::identity(f, n * n), theta}};
}

/// C as a real algebra, basis {1, i}, Delta(1) = 1 x 1 - i x i.
inline FrobAlgebra complex_over_real_frobenius(CycField f)
{
    const CycScalar one(f, 1L);
    Mat m(f, 2, 4);
    m.set(0, 0, one);
    m.set(1, 1, one);
    m.set(1, 2, one);
    m.set(0, 3, -one);
    AlgebraData a{f, 2, {"1", "i"}, std::move(m), Vec::basis(f, 2, 0)};
    Vec d1(f, 4);
    d1[0] = one;
    d1[3] = -one;
    return make_frobenius(std::move(a), d1);
}

/// (id, sqrt 2), (id, -sqrt 2) and (conjugation, 0).
inline std::vector<ExtFrobAlgebra> complex_over_real(CycField f)
{
    if (f.conductor() % 8 != 0)
        throw FieldError("complex_over_real needs a conductor divisible by 8, got " + std::to_string(f.conductor()));
    FrobAlgebra fa = complex_over_real_frobenius(f);
    const CycScalar r2 = sqrt_rational(f, 2);
    const Mat id = Mat::identity(f, 2);
    Mat conj = id;
    conj.set(1, 1, CycScalar(f, -1L));
    return {{fa, {id, r2 * fa.u()}}, {fa, {id, -r2 * fa.u()}}, {fa, {conj, Vec(f, 2)}}};
}

namespace detail {

inline Vec group_vec(CycField f, std::size_t n, const std::vector<std::pair<std::size_t, CycScalar>>& terms)
{
    Vec v(f, n);
    for (const auto& [k, c] : terms)
        v[k] += c;
    return v;
}

inline void sort_unique(std::vector<ExtFrobAlgebra>& v)
{
    std::sort(v.begin(), v.end(), [](const ExtFrobAlgebra& a, const ExtFrobAlgebra& b) {
        const int c = compare(a.ext.phi, b.ext.phi);
        return c != 0 ? c < 0 : compare(a.ext.theta, b.ext.theta) < 0;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace detail

/// Every structure listed for k(C2 x C2), over all index assignments, duplicate-free.
inline std::vector<ExtFrobAlgebra> klein_four_extensions(CycField f)
{
    FrobAlgebra fa = group_algebra(klein_four_group(), f);
    const CycScalar one(f, 1L), two(f, 2L);
    std::vector<ExtFrobAlgebra> out;
    const Mat id = Mat::identity(f, 4);
    auto add_pm = [&](const Mat& phi, const Vec& theta) {
        out.push_back({fa, {phi, theta}});
        out.push_back({fa, {phi, -theta}});
    };
    std::vector<std::size_t> p{1, 2, 3};
    do {
        const std::size_t i = p[0], j = p[1], l = p[2];
        auto v = [&](std::vector<std::pair<std::size_t, CycScalar>> t) { return detail::group_vec(f, 4, t); };
        add_pm(id, v({{0, two}}));
        add_pm(id, v({{i, two}}));
        for (int s : {1, -1}) {
            const CycScalar c(f, static_cast<long>(s));
            add_pm(id, v({{0, one}, {l, one}, {i, c}, {j, -c}}));
            add_pm(id, v({{0, one}, {l, -one}, {i, c}, {j, c}}));
        }
        Mat b = id;
        b.set(i, i, -one);
        b.set(j, j, -one);
        out.push_back({fa, {b, Vec(f, 4)}});
        Mat c(f, 4, 4);
        c.set(0, 0, one);
        c.set(l, l, one);
        c.set(j, i, one);
        c.set(i, j, one);
        add_pm(c, v({{0, one}, {l, one}}));
        add_pm(c, v({{i, one}, {j, one}}));
        Mat d(f, 4, 4);
        d.set(0, 0, one);
        d.set(l, l, one);
        d.set(j, i, -one);
        d.set(i, j, -one);
        add_pm(d, v({{0, one}, {l, -one}}));
        add_pm(d, v({{i, one}, {j, -one}}));
    } while (std::next_permutation(p.begin(), p.end()));
    detail::sort_unique(out);
    return out;
}

/// A structure as listed for a family, with the free directions of its theta family.
struct ClaimedStructure {
    std::string label;
    ExtStructure ext;
    std::vector<Vec> directions;
};

/// A catalog family: the algebra, its documented lattice, listed structures and shipped witnesses.
struct Family {
    std::string name;
    std::string title;
    FrobAlgebra algebra;
    CandidateLattice lattice;
    std::optional<CandidateLattice> witness_lattice;
    std::vector<Mat> witnesses;
    std::vector<std::string> witness_labels;
    std::vector<ClaimedStructure> claimed;
    std::optional<std::size_t> claimed_classes;
    bool evidence_only = false;
};

namespace detail {

inline Mat diagonal(CycField f, const std::vector<CycScalar>& d)
{
    Mat m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.set(i, i, d[i]);
    return m;
}

/// Matrix of the algebra map of kC_n with g -> c g^k.
inline Mat cyclic_map(CycField f, std::size_t n, const CycScalar& c, std::size_t k)
{
    Mat m(f, n, n);
    CycScalar cj(f, 1L);
    for (std::size_t j = 0; j < n; ++j) {
        m.set((j * k) % n, j, cj);
        cj *= c;
    }
    return m;
}

inline CycScalar sc(CycField f, long v) { return CycScalar(f, v); }

inline Family family_k(CycField f)
{
    Family fam{"k", "the ground field", unit_frobenius(f),
               CandidateLattice::symmetric(f, {sc(f, 1)}, "{0,+-1}"), std::nullopt, {}, {}, {}, 2, false};
    for (long s : {1L, -1L})
        fam.claimed.push_back({s > 0 ? "theta=1" : "theta=-1", {Mat::identity(f, 1), Vec(f, {sc(f, s)})}, {}});
    return fam;
}

inline Family family_cr(CycField f)
{
    const CycScalar r2 = sqrt_rational(f, 2);
    Family fam{"CR", "C as a real Frobenius algebra", complex_over_real_frobenius(f),
               CandidateLattice::symmetric(f, {sc(f, 1), r2}, "{0,+-1,+-sqrt2}"), std::nullopt, {}, {}, {}, 3,
               false};
    const std::vector<std::string> labels{"(id, sqrt2)", "(id, -sqrt2)", "(conj, 0)"};
    auto list = complex_over_real(f);
    for (std::size_t k = 0; k < list.size(); ++k)
        fam.claimed.push_back({labels[k], list[k].ext, {}});
    return fam;
}

inline Family family_nil(std::size_t n, CycField f)
{
    const CycScalar rn = sqrt_rational(f, static_cast<unsigned>(n));
    Family fam{"nil" + std::to_string(n), "k[x]/(x^" + std::to_string(n) + ")", nilpotent_algebra(n, f),
               CandidateLattice::symmetric(f, {sc(f, 1), rn}, "{0,+-1,+-sqrt" + std::to_string(n) + "}"),
               std::nullopt, {}, {}, {}, std::nullopt, false};
    if (n % 2 == 1) {
        std::vector<Vec> dirs;
        for (std::size_t j = (n + 1) / 2; j < n; ++j)
            dirs.push_back(Vec::basis(f, n, j));
        for (long s : {1L, -1L}) {
            Vec theta = Vec::basis(f, n, (n - 1) / 2);
            fam.claimed.push_back({std::string(s > 0 ? "" : "-") + "sqrt" + std::to_string(n) + " x^" +
                                       std::to_string((n - 1) / 2) + " + tail",
                                   {Mat::identity(f, n), sc(f, s) * rn * theta}, dirs});
        }
    }
    return fam;
}

inline Family family_c2(CycField f)
{
    const CycScalar r2 = sqrt_rational(f, 2);
    const Mat id = Mat::identity(f, 2);
    const Mat neg = diagonal(f, {sc(f, 1), sc(f, -1)});
    Family fam{"kC2", "group algebra of C2", group_algebra(cyclic_group(2), f),
               CandidateLattice::symmetric(f, {sc(f, 1), r2}, "{0,+-1,+-sqrt2}"), std::nullopt, {neg},
               {"g -> -g"}, {}, 4, false};
    for (long s : {1L, -1L}) {
        fam.claimed.push_back({"(a) " + std::string(s > 0 ? "" : "-") + "sqrt2 e", {id, sc(f, s) * r2 * Vec::basis(f, 2, 0)}, {}});
        fam.claimed.push_back({"(a) " + std::string(s > 0 ? "" : "-") + "sqrt2 g", {id, sc(f, s) * r2 * Vec::basis(f, 2, 1)}, {}});
    }
    fam.claimed.push_back({"(b) phi(g)=-g, 0", {neg, Vec(f, 2)}, {}});
    return fam;
}

inline Family family_c3(CycField f)
{
    const CycScalar r3 = sqrt_rational(f, 3);
    const CycScalar inv_r3 = r3.inverse();
    const std::vector<CycScalar> lattice_base{sc(f, 1), r3, inv_r3, sc(f, 2) * inv_r3};
    std::vector<CycScalar> base;
    for (long k = 0; k < 3; ++k)
        for (const auto& b : lattice_base)
            base.push_back(root_of_unity(f, 3, k) * b);
    Family fam{"kC3", "group algebra of C3", group_algebra(cyclic_group(3), f),
               CandidateLattice::symmetric(f, base, "{0, +-w^k, +-sqrt3, +-w^k/sqrt3, +-2w^k/sqrt3}"), std::nullopt,
               {}, {}, {}, 14, false};
    const Mat id = Mat::identity(f, 3);
    for (long s : {1L, -1L}) {
        const std::string sg = s > 0 ? "" : "-";
        fam.claimed.push_back({"(a) " + sg + "sqrt3 e", {id, sc(f, s) * r3 * Vec::basis(f, 3, 0)}, {}});
        for (long k = 0; k < 3; ++k) {
            const CycScalar w = root_of_unity(f, 3, k);
            Vec t(f, {sc(f, 1), sc(f, -2) * w, sc(f, -2) * w * w});
            fam.claimed.push_back(
                {"(a) " + sg + "(e - 2w g - 2w^2 g^2)/sqrt3, w=zeta3^" + std::to_string(k), {id, sc(f, s) * inv_r3 * t}, {}});
        }
    }
    for (long k = 0; k < 3; ++k) {
        const CycScalar w = root_of_unity(f, 3, k);
        const Mat phi = cyclic_map(f, 3, w, 2);
        Vec t(f, {sc(f, 1), w, w * w});
        for (long s : {1L, -1L})
            fam.claimed.push_back({"(b) phi(g)=w g^2, " + std::string(s > 0 ? "" : "-") +
                                       "(e + w g + w^2 g^2)/sqrt3, w=zeta3^" + std::to_string(k),
                                   {phi, sc(f, s) * inv_r3 * t}, {}});
    }
    return fam;
}

inline Family family_c4(CycField f)
{
    const CycScalar i = root_of_unity(f, 4, 1);
    const CycScalar one = sc(f, 1), two = sc(f, 2);
    const CycScalar half(f, Rational(1, 2));
    std::vector<CycScalar> base{one, i, two, two * i, one + i, one - i};
    CandidateLattice lattice =
        CandidateLattice::symmetric(f, base, "{0, +-1, +-i, +-2, +-2i, +-(1+i), +-(1-i)}");
    CandidateLattice halves = CandidateLattice::symmetric(f, {half, half * i, half * (one + i), half * (one - i)}, "");
    const Mat id = Mat::identity(f, 4);
    const Mat neg = cyclic_map(f, 4, -one, 1);
    const Mat rot = cyclic_map(f, 4, i, 1);
    Family fam{"kC4", "group algebra of C4", group_algebra(cyclic_group(4), f), lattice,
               lattice.united(halves, "structure lattice with +-1/2, +-i/2, +-(1+i)/2, +-(1-i)/2"),
               {neg, rot}, {"f(g) = -g", "f'(g) = i g"}, {}, 8, false};
    auto v = [&](std::vector<std::pair<std::size_t, CycScalar>> t) { return group_vec(f, 4, t); };
    for (long s : {1L, -1L}) {
        const CycScalar c = sc(f, s);
        const std::string sg = s > 0 ? "" : "-";
        fam.claimed.push_back({"(a) " + sg + "2e", {id, v({{0, c * two}})}, {}});
        fam.claimed.push_back({"(a) " + sg + "2g^2", {id, v({{2, c * two}})}, {}});
        fam.claimed.push_back({"(a) " + sg + "(1-i)(g+ig^3)", {id, c * (one - i) * v({{1, one}, {3, i}})}, {}});
        fam.claimed.push_back({"(a) " + sg + "(1+i)(g-ig^3)", {id, c * (one + i) * v({{1, one}, {3, -i}})}, {}});
    }
    fam.claimed.push_back({"(b) phi(g)=-g, 0", {neg, Vec(f, 4)}, {}});
    for (long k = 0; k < 4; ++k) {
        const CycScalar w = root_of_unity(f, 4, k);
        const Mat phi = cyclic_map(f, 4, w, 3);
        const CycScalar c = half * (one + w * w);
        const std::string wl = "w=zeta4^" + std::to_string(k);
        for (long s : {1L, -1L}) {
            const std::string sg = s > 0 ? "" : "-";
            fam.claimed.push_back({"(c) phi(g)=w g^3, " + sg + "(1+w^2)/2 (e-g^2), " + wl,
                                   {phi, sc(f, s) * c * v({{0, one}, {2, -one}})}, {}});
            fam.claimed.push_back({"(c) phi(g)=w g^3, " + sg + "i(1+w^2)/2 (g-g^3), " + wl,
                                   {phi, sc(f, s) * i * c * v({{1, one}, {3, -one}})}, {}});
        }
    }
    return fam;
}

inline Family family_klein(CycField f)
{
    Family fam{"klein", "group algebra of C2 x C2", group_algebra(klein_four_group(), f),
               CandidateLattice::symmetric(f, {sc(f, 1), sc(f, 2)}, "{0,+-1,+-2}"), std::nullopt, {}, {}, {},
               std::nullopt, false};
    for (const auto& e : klein_four_extensions(f))
        fam.claimed.push_back({"", e.ext, {}});
    return fam;
}

inline Family family_t2(CycField f)
{
    FrobAlgebra fa = taft_algebra(2, 1, f);
    Family fam{"T2", "Taft algebra T2(-1)", fa, CandidateLattice::symmetric(f, {sc(f, 1)}, "{0,+-1}"),
               std::nullopt, {}, {}, {}, std::nullopt, false};
    fam.claimed.push_back({"(id, 0) + span{x, gx}", {Mat::identity(f, 4), Vec(f, 4)},
                           {Vec::basis(f, 4, 1), Vec::basis(f, 4, 3)}});
    return fam;
}

inline Family family_cyclic_evidence(std::size_t n, CycField f)
{
    std::vector<CycScalar> roots;
    for (long k = 0; k < static_cast<long>(n); ++k)
        roots.push_back(root_of_unity(f, static_cast<unsigned>(n), k));
    return Family{"kC" + std::to_string(n), "group algebra of C" + std::to_string(n),
                  group_algebra(cyclic_group(n), f),
                  CandidateLattice::symmetric(f, roots, "{0} with +-zeta" + std::to_string(n) + "^k"),
                  std::nullopt, {}, {}, {}, std::nullopt, true};
}

/// Drop repeated claimed structures, keeping the first label.
inline Family dedupe_claimed(Family fam)
{
    std::vector<ClaimedStructure> out;
    for (auto& c : fam.claimed) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const ClaimedStructure& o) {
            return o.ext == c.ext && o.directions == c.directions;
        });
        if (!seen)
            out.push_back(std::move(c));
    }
    fam.claimed = std::move(out);
    return fam;
}

} // namespace detail

/// Names accepted by catalog_family.
inline std::vector<std::string> catalog_family_names()
{
    return {"k", "CR", "nil2", "nil3", "nil4", "nil5", "nil6", "kC2", "kC3", "kC4", "kC5", "kC6", "klein", "T2"};
}

/// Smallest conductor holding every coefficient of the family.
inline unsigned family_default_conductor(const std::string& name)
{
    if (name == "k" || name == "klein")
        return 1;
    if (name == "CR" || name == "kC2" || name == "kC4")
        return 8;
    if (name == "kC3")
        return 12;
    if (name == "kC5")
        return 5;
    if (name == "kC6")
        return 6;
    if (name == "T2")
        return 2;
    if (name.rfind("nil", 0) == 0 && name.size() > 3)
        return sqrt_conductor(static_cast<unsigned>(std::stoul(name.substr(3))));
    throw PreconditionError("unknown catalog family: " + name);
}

/// The named family over Q(zeta_conductor); the default conductor is used when none is given.
inline Family catalog_family(const std::string& name, std::optional<unsigned> conductor = std::nullopt)
{
    const unsigned base = family_default_conductor(name);
    const unsigned n = conductor.value_or(base);
    if (n % base != 0)
        throw FieldError("family " + name + " needs a conductor divisible by " + std::to_string(base));
    const CycField f = field_make(n);
    if (name == "k")
        return detail::family_k(f);
    if (name == "CR")
        return detail::family_cr(f);
    if (name == "kC2")
        return detail::family_c2(f);
    if (name == "kC3")
        return detail::family_c3(f);
    if (name == "kC4")
        return detail::dedupe_claimed(detail::family_c4(f));
    if (name == "kC5" || name == "kC6")
        return detail::family_cyclic_evidence(name == "kC5" ? 5 : 6, f);
    if (name == "klein")
        return detail::family_klein(f);
    if (name == "T2")
        return detail::family_t2(f);
    const std::size_t k = std::stoul(name.substr(3));
    if (k < 2)
        throw PreconditionError("nil family requires n >= 2");
    return detail::family_nil(k, f);
}

/// Classify a family at its documented lattices with its shipped witnesses.
inline Classification classify_family(const Family& fam, std::uint64_t budget = default_budget())
{
    ClassifyOptions opts;
    opts.witness_lattice = fam.witness_lattice;
    opts.budget = budget;
    return classify_extended(fam.algebra, fam.lattice, fam.witnesses, opts);
}

} // namespace frobex

#endif // FROBEX_CATALOG_HPP
