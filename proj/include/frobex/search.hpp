#ifndef FROBEX_SEARCH_HPP
#define FROBEX_SEARCH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobex/extended.hpp"

namespace frobex {

/// Finite scalar set that search coordinates are drawn from.
struct CandidateLattice {
    CycField field;
    std::vector<CycScalar> values; // sorted, duplicate-free
    std::string description;

    static CandidateLattice make(CycField f, std::vector<CycScalar> v, std::string description)
    {
        for (const auto& s : v)
            require_same_field(f, s.field());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return {f, std::move(v), std::move(description)};
    }

    /// {0} together with +-s for every s given.
    static CandidateLattice symmetric(CycField f, const std::vector<CycScalar>& v, std::string description)
    {
        std::vector<CycScalar> all{CycScalar(f)};
        for (const auto& s : v) {
            all.push_back(s);
            all.push_back(-s);
        }
        return make(f, std::move(all), std::move(description));
    }

    std::size_t size() const { return values.size(); }

    CandidateLattice united(const CandidateLattice& o, std::string description) const
    {
        std::vector<CycScalar> all = values;
        all.insert(all.end(), o.values.begin(), o.values.end());
        return make(field, std::move(all), std::move(description));
    }
};

/// Node budget for searches, from FROBEX_BUDGET when set.
inline std::uint64_t default_budget()
{
    if (const char* env = std::getenv("FROBEX_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0')
            return v;
    }
    return 50'000'000ULL;
}

/// Largest algebra dimension accepted by the searches.
inline std::size_t search_dim_bound() { return 6; }

namespace detail {

using SparseColumn = std::vector<std::pair<std::size_t, CycScalar>>;

inline std::vector<SparseColumn> sparse_columns(const Mat& m)
{
    std::vector<SparseColumn> out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row_entries(r))
            out[c].push_back({r, v});
    return out;
}

/// x * y from the sparse columns of m.
inline Vec sparse_product(const std::vector<SparseColumn>& mcols, std::size_t d, const Vec& x, const Vec& y)
{
    std::vector<CycScalar> acc(d, CycScalar(x.field()));
    for (std::size_t a = 0; a < d; ++a) {
        if (x[a].is_zero())
            continue;
        for (std::size_t b = 0; b < d; ++b) {
            if (y[b].is_zero())
                continue;
            const CycScalar xy = x[a] * y[b];
            for (const auto& [k, v] : mcols[a * d + b])
                acc[k] += xy * v;
        }
    }
    return Vec(x.field(), std::move(acc));
}

inline void require_search_dim(std::size_t d)
{
    if (d == 0)
        throw PreconditionError("searches require dimension at least 1");
    if (d > search_dim_bound())
        throw CapacityError("dimension " + std::to_string(d) + " exceeds the search bound " +
                            std::to_string(search_dim_bound()));
}

/// Column-by-column backtracking over Frobenius morphisms src -> dst with lattice coordinates.
/// Counit and unit constraints are solved linearly; products propagate columns where possible.
class MorphismSearch {
public:
    using Columns = std::vector<std::optional<Vec>>;
    using Check = std::function<bool(const Columns&)>;

    MorphismSearch(const FrobAlgebra& src, const FrobAlgebra& dst, const CandidateLattice& lattice,
                   std::uint64_t budget)
        : src_(src), dst_(dst), lattice_(lattice), budget_(budget), d_(src.dim()), e_(dst.dim()),
          pivot_coeff_(dst.field())
    {
        require_same_field(src.field(), dst.field());
        require_same_field(src.field(), lattice.field);
        src_m_ = sparse_columns(src.m());
        dst_m_ = sparse_columns(dst.m());
        src_delta_ = sparse_columns(src.delta());
        by_column_.resize(d_);
        for (const auto& [p, v] : dst.eps().row_entries(0)) {
            if (!pivot_) {
                pivot_ = p;
                pivot_coeff_ = v;
            }
            eps_dst_.push_back({p, v});
        }
        for (std::size_t a = 0; a < d_; ++a) {
            for (std::size_t b = 0; b < d_; ++b) {
                const SparseColumn& supp = src_m_[a * d_ + b];
                std::vector<std::size_t> involved{a, b};
                for (const auto& [k, v] : supp)
                    involved.push_back(k);
                add_constraint(involved, [this, a, b](const Columns& c) {
                    return sparse_product(dst_m_, e_, *c[a], *c[b]) == combine(src_m_[a * d_ + b], c);
                });
                product_rules_.push_back({a, b});
            }
        }
        for (std::size_t j = 0; j < d_; ++j) {
            std::vector<std::size_t> involved{j};
            for (const auto& [pq, v] : src_delta_[j]) {
                involved.push_back(pq / d_);
                involved.push_back(pq % d_);
            }
            add_constraint(involved, [this, j](const Columns& c) {
                Vec rhs(dst_.field(), e_ * e_);
                for (const auto& [pq, v] : src_delta_[j])
                    rhs = rhs + v * kron(*c[pq / d_], *c[pq % d_]);
                return dst_.delta() * *c[j] == rhs;
            });
        }
        for (std::size_t k = 0; k < d_; ++k)
            if (!src.u()[k].is_zero())
                unit_support_.push_back({k, src.u()[k]});
        std::vector<std::size_t> involved;
        for (const auto& [k, v] : unit_support_)
            involved.push_back(k);
        add_constraint(involved, [this](const Columns& c) { return combine(unit_support_, c) == dst_.u(); });
    }

    MorphismSearch(const MorphismSearch&) = delete;
    MorphismSearch& operator=(const MorphismSearch&) = delete;

    void add_constraint(std::vector<std::size_t> involved, Check check)
    {
        std::sort(involved.begin(), involved.end());
        involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
        const std::size_t id = constraints_.size();
        for (std::size_t k : involved)
            by_column_[k].push_back(id);
        constraints_.push_back({std::move(involved), std::move(check)});
    }

    /// Keep only f with f f = I.
    void require_involution() { involution_ = true; }
    void stop_at_first() { first_only_ = true; }

    /// Sum of coeff * f(e_k) over a sparse coefficient list.
    Vec combine(const SparseColumn& coeffs, const Columns& c) const
    {
        Vec out(dst_.field(), e_);
        for (const auto& [k, v] : coeffs)
            out = out + v * *c[k];
        return out;
    }

    std::vector<Mat> run()
    {
        const std::size_t free = pivot_ ? e_ - 1 : e_;
        const double per_column = std::pow(static_cast<double>(lattice_.size()), static_cast<double>(free));
        if (per_column > static_cast<double>(budget_))
            throw CapacityError("candidate space " + std::to_string(lattice_.size()) + "^" + std::to_string(free) +
                                " per column exceeds budget " + std::to_string(budget_));
        results_.clear();
        done_ = false;
        nodes_ = 0;
        Columns cols(d_);
        std::vector<std::size_t> newly;
        if (unit_support_.size() == 1) {
            const auto& [k, v] = unit_support_.front();
            cols[k] = v.inverse() * dst_.u();
            newly.push_back(k);
        }
        bool ok = true;
        for (std::size_t id = 0; id < constraints_.size() && ok; ++id)
            if (constraints_[id].involved.empty())
                ok = constraints_[id].check(cols);
        if (ok) {
            for (std::size_t k : newly)
                ok = ok && counit_ok(k, *cols[k]);
            ok = ok && propagate(cols, newly) && check_touched(cols, newly);
        }
        if (ok)
            dfs(cols);
        std::sort(results_.begin(), results_.end(), [](const Mat& a, const Mat& b) { return compare(a, b) < 0; });
        results_.erase(std::unique(results_.begin(), results_.end()), results_.end());
        return results_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    struct Constraint {
        std::vector<std::size_t> involved;
        Check check;
    };

    bool counit_ok(std::size_t j, const Vec& v) const
    {
        CycScalar s(dst_.field());
        for (const auto& [p, c] : eps_dst_)
            s += c * v[p];
        return s == src_.eps().at(0, j);
    }

    bool propagate(Columns& c, std::vector<std::size_t>& newly) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [a, b] : product_rules_) {
                if (!c[a] || !c[b])
                    continue;
                const SparseColumn& supp = src_m_[a * d_ + b];
                std::optional<std::size_t> unknown;
                bool several = false;
                for (const auto& [k, v] : supp) {
                    if (!c[k]) {
                        if (unknown && *unknown != k)
                            several = true;
                        unknown = k;
                    }
                }
                if (!unknown || several)
                    continue;
                Vec rest = sparse_product(dst_m_, e_, *c[a], *c[b]);
                CycScalar coeff(dst_.field());
                for (const auto& [k, v] : supp) {
                    if (k == *unknown)
                        coeff += v;
                    else
                        rest = rest - v * *c[k];
                }
                if (coeff.is_zero())
                    continue;
                Vec value = coeff.inverse() * rest;
                if (!counit_ok(*unknown, value))
                    return false;
                c[*unknown] = std::move(value);
                newly.push_back(*unknown);
                changed = true;
            }
            std::optional<std::size_t> unknown;
            bool several = false;
            for (const auto& [k, v] : unit_support_) {
                if (!c[k]) {
                    several = several || unknown.has_value();
                    unknown = k;
                }
            }
            if (unknown && !several) {
                Vec rest = dst_.u();
                CycScalar coeff(dst_.field());
                for (const auto& [k, v] : unit_support_) {
                    if (k == *unknown)
                        coeff = v;
                    else
                        rest = rest - v * *c[k];
                }
                Vec value = coeff.inverse() * rest;
                if (!counit_ok(*unknown, value))
                    return false;
                c[*unknown] = std::move(value);
                newly.push_back(*unknown);
                changed = true;
            }
        }
        return true;
    }

    bool check_touched(const Columns& c, const std::vector<std::size_t>& newly) const
    {
        std::vector<std::size_t> ids;
        for (std::size_t k : newly)
            ids.insert(ids.end(), by_column_[k].begin(), by_column_[k].end());
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (std::size_t id : ids) {
            const Constraint& con = constraints_[id];
            if (std::all_of(con.involved.begin(), con.involved.end(), [&](std::size_t k) { return c[k].has_value(); }) &&
                !con.check(c))
                return false;
        }
        return true;
    }

    void finish(const Columns& c)
    {
        std::vector<Vec> cols;
        for (const auto& v : c)
            cols.push_back(*v);
        Mat f = Mat::from_columns(dst_.field(), e_, cols);
        if (involution_ && !(f * f).is_identity())
            return;
        results_.push_back(std::move(f));
        if (first_only_)
            done_ = true;
    }

    void dfs(Columns& c)
    {
        std::size_t j = 0;
        while (j < d_ && c[j])
            ++j;
        if (j == d_) {
            finish(c);
            return;
        }
        const CycField f = dst_.field();
        const CycScalar target = src_.eps().at(0, j);
        std::vector<std::size_t> free;
        for (std::size_t p = 0; p < e_; ++p)
            if (!pivot_ || p != *pivot_)
                free.push_back(p);
        std::vector<std::size_t> idx(free.size(), 0);
        const std::size_t L = lattice_.size();
        while (true) {
            if (++nodes_ > budget_)
                throw CapacityError("search exceeded budget of " + std::to_string(budget_) + " candidates");
            std::vector<CycScalar> entries(e_, CycScalar(f));
            for (std::size_t t = 0; t < free.size(); ++t)
                entries[free[t]] = lattice_.values[idx[t]];
            bool admissible = true;
            if (pivot_) {
                CycScalar s = target;
                for (const auto& [p, v] : eps_dst_)
                    if (p != *pivot_)
                        s -= v * entries[p];
                entries[*pivot_] = s / pivot_coeff_;
            } else {
                admissible = target.is_zero();
            }
            if (admissible) {
                c[j] = Vec(f, std::move(entries));
                std::vector<std::size_t> newly{j};
                if (propagate(c, newly) && check_touched(c, newly))
                    dfs(c);
                for (std::size_t k : newly)
                    c[k].reset();
                if (done_)
                    return;
            }
            std::size_t t = 0;
            while (t < idx.size() && ++idx[t] == L)
                idx[t++] = 0;
            if (t == idx.size())
                break;
        }
    }

    const FrobAlgebra& src_;
    const FrobAlgebra& dst_;
    const CandidateLattice& lattice_;
    std::uint64_t budget_;
    std::size_t d_, e_;
    std::vector<SparseColumn> src_m_, dst_m_, src_delta_;
    SparseColumn eps_dst_, unit_support_;
    std::optional<std::size_t> pivot_;
    CycScalar pivot_coeff_;
    std::vector<Constraint> constraints_;
    std::vector<std::vector<std::size_t>> by_column_;
    std::vector<std::pair<std::size_t, std::size_t>> product_rules_;
    bool involution_ = false;
    bool first_only_ = false;
    bool done_ = false;
    std::uint64_t nodes_ = 0;
    std::vector<Mat> results_;
};

} // namespace detail

/// All Frobenius involutions of fa whose free coordinates lie in the lattice, sorted.
inline std::vector<Mat> find_frobenius_involutions(const FrobAlgebra& fa, const CandidateLattice& lattice,
                                                   std::uint64_t budget = default_budget())
{
    validate_shapes(fa);
    detail::require_search_dim(fa.dim());
    detail::MorphismSearch s(fa, fa, lattice, budget);
    s.require_involution();
    return s.run();
}

/// Morphisms src -> dst of extended Frobenius algebras with lattice coordinates.
inline std::vector<Mat> find_ext_morphisms(const ExtFrobAlgebra& src, const ExtFrobAlgebra& dst,
                                           const CandidateLattice& lattice, bool first_only = false,
                                           std::uint64_t budget = default_budget())
{
    validate_shapes(src);
    validate_shapes(dst);
    detail::require_search_dim(src.dim());
    detail::MorphismSearch s(src.frob, dst.frob, lattice, budget);
    const auto phi_cols = detail::sparse_columns(src.ext.phi);
    for (std::size_t j = 0; j < src.dim(); ++j) {
        std::vector<std::size_t> involved{j};
        for (const auto& [k, v] : phi_cols[j])
            involved.push_back(k);
        s.add_constraint(involved, [&s, &dst, col = phi_cols[j], j](const detail::MorphismSearch::Columns& c) {
            return s.combine(col, c) == dst.ext.phi * *c[j];
        });
    }
    detail::SparseColumn theta;
    std::vector<std::size_t> involved;
    for (std::size_t k = 0; k < src.dim(); ++k) {
        if (!src.ext.theta[k].is_zero()) {
            theta.push_back({k, src.ext.theta[k]});
            involved.push_back(k);
        }
    }
    s.add_constraint(involved, [&s, &dst, theta](const detail::MorphismSearch::Columns& c) {
        return s.combine(theta, c) == dst.ext.theta;
    });
    if (first_only)
        s.stop_at_first();
    return s.run();
}

/// Affine family basepoint + span(directions) of theta solutions.
struct ThetaFamily {
    Vec basepoint;
    std::vector<Vec> directions;
};

struct ThetaSolutions {
    Vec target;                     // m (phi x I) Delta u
    std::vector<Vec> points;        // lattice solutions, sorted
    std::vector<ThetaFamily> families;
    std::vector<Vec> invariant_basis; // basis of the subspace allowed by condition (ii)
};

/// m (phi x I) Delta u.
inline Vec theta_target(const FrobAlgebra& fa, const Mat& phi)
{
    const Mat id = Mat::identity(fa.field(), fa.dim());
    return fa.m() * (kron(phi, id) * (fa.delta() * fa.u()));
}

namespace detail {

/// Row-reduce a list of vectors; returns the reduced rows and their pivots.
inline Rref rref_vectors(const std::vector<Vec>& vs, std::size_t d)
{
    std::vector<std::vector<CycScalar>> rows;
    for (const Vec& v : vs)
        rows.push_back(v.entries());
    return rref(std::move(rows), d);
}

/// Canonical form of theta0 + span(w).
inline ThetaFamily reduce_family(const Vec& theta0, const std::vector<Vec>& w)
{
    const CycField f = theta0.field();
    const std::size_t d = theta0.size();
    ThetaFamily fam{theta0, {}};
    if (w.empty())
        return fam;
    Rref r = rref_vectors(w, d);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        fam.directions.push_back(Vec(f, r.rows[i]));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        const CycScalar c = fam.basepoint[r.pivots[i]];
        if (!c.is_zero())
            fam.basepoint = fam.basepoint - c * fam.directions[i];
    }
    return fam;
}

inline bool in_span(const std::vector<Vec>& w, const Vec& v)
{
    if (v.is_zero())
        return true;
    if (w.empty())
        return false;
    std::vector<Vec> all = w;
    all.push_back(v);
    return rref_vectors(all, v.size()).pivots.size() == rref_vectors(w, v.size()).pivots.size();
}

/// Group solutions into affine families theta0 + span(W) on which theta^2 is constant.
inline std::vector<ThetaFamily> group_families(const AlgebraData& a, const std::vector<Vec>& points)
{
    std::vector<ThetaFamily> out;
    std::vector<Vec> remaining = points;
    while (!remaining.empty()) {
        const Vec theta0 = remaining.front();
        std::vector<Vec> w;
        for (std::size_t i = 1; i < remaining.size(); ++i) {
            const Vec cand = remaining[i] - theta0;
            if (in_span(w, cand))
                continue;
            if (!(multiply(a, theta0, cand) + multiply(a, cand, theta0)).is_zero())
                continue;
            if (!multiply(a, cand, cand).is_zero())
                continue;
            bool anticommute = true;
            for (const Vec& x : w)
                anticommute = anticommute && (multiply(a, x, cand) + multiply(a, cand, x)).is_zero();
            if (anticommute)
                w.push_back(cand);
        }
        std::vector<Vec> next;
        for (std::size_t i = 1; i < remaining.size(); ++i)
            if (!in_span(w, remaining[i] - theta0))
                next.push_back(remaining[i]);
        out.push_back(reduce_family(theta0, w));
        remaining = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [](const ThetaFamily& x, const ThetaFamily& y) { return compare(x.basepoint, y.basepoint) < 0; });
    return out;
}

} // namespace detail

/// theta with condition (ii) and m(theta x theta) = m(phi x I) Delta u, coordinates from the lattice
/// in the basis of the (ii)-subspace.
inline ThetaSolutions solve_theta(const FrobAlgebra& fa, const Mat& phi, const CandidateLattice& lattice,
                                  std::uint64_t budget = default_budget())
{
    validate_shapes(fa);
    require_same_field(fa.field(), lattice.field);
    const CycField f = fa.field();
    const std::size_t d = fa.dim();
    if (d == 0)
        throw PreconditionError("solve_theta requires dimension at least 1");
    ThetaSolutions out;
    out.target = theta_target(fa, phi);
    const Mat id = Mat::identity(f, d);
    const Mat dphi = phi - id;
    Mat stacked(f, d * d, d);
    for (std::size_t a = 0; a < d; ++a) {
        const Mat block = dphi * right_mult(fa.algebra, Vec::basis(f, d, a));
        for (std::size_t r = 0; r < d; ++r)
            for (const auto& [c, v] : block.row_entries(r))
                stacked.set(a * d + r, c, v);
    }
    auto sol = solve_linear(stacked, Vec(f, d * d));
    out.invariant_basis = sol->nullspace;
    const std::vector<Vec>& basis = out.invariant_basis;
    const std::size_t r = basis.size();
    const std::size_t L = lattice.size();
    const double space = std::pow(static_cast<double>(L), static_cast<double>(r));
    if (space > static_cast<double>(budget))
        throw CapacityError("theta candidate space " + std::to_string(L) + "^" + std::to_string(r) +
                            " exceeds budget " + std::to_string(budget));
    const auto mcols = detail::sparse_columns(fa.m());
    std::vector<std::vector<Vec>> prod(r, std::vector<Vec>(r));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l)
            prod[k][l] = detail::sparse_product(mcols, d, basis[k], basis[l]);
    std::vector<std::vector<CycScalar>> table(L, std::vector<CycScalar>(L, CycScalar(f)));
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j)
            table[i][j] = lattice.values[i] * lattice.values[j];
    std::vector<std::size_t> idx(r, 0);
    while (true) {
        std::vector<CycScalar> acc(d, CycScalar(f));
        for (std::size_t k = 0; k < r; ++k) {
            if (lattice.values[idx[k]].is_zero())
                continue;
            for (std::size_t l = 0; l < r; ++l) {
                const CycScalar& c = table[idx[k]][idx[l]];
                if (c.is_zero())
                    continue;
                const Vec& p = prod[k][l];
                for (std::size_t t = 0; t < d; ++t)
                    if (!p[t].is_zero())
                        acc[t] += c * p[t];
            }
        }
        if (Vec(f, std::move(acc)) == out.target) {
            Vec theta(f, d);
            for (std::size_t k = 0; k < r; ++k)
                if (!lattice.values[idx[k]].is_zero())
                    theta = theta + lattice.values[idx[k]] * basis[k];
            out.points.push_back(std::move(theta));
        }
        std::size_t t = 0;
        while (t < r && ++idx[t] == L)
            idx[t++] = 0;
        if (t == r)
            break;
    }
    std::sort(out.points.begin(), out.points.end(), [](const Vec& a, const Vec& b) { return compare(a, b) < 0; });
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    out.families = detail::group_families(fa.algebra, out.points);
    return out;
}

/// One classified structure: phi with the basepoint of its theta family and the family directions.
struct ClassifiedStructure {
    ExtStructure ext;
    std::vector<Vec> directions;
};

/// A morphism joining two structures into one class.
struct ClassLink {
    std::size_t from = 0;
    std::size_t to = 0;
    std::string via; // "witness <k>" or "search"
    Mat morphism;
};

struct Classification {
    std::vector<ClassifiedStructure> structures;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::pair<std::size_t, std::size_t>> unresolved;
    std::vector<ClassLink> links;
    std::vector<Mat> involutions;
};

struct ClassifyOptions {
    std::optional<CandidateLattice> witness_lattice; // defaults to the structure lattice
    bool witness_search = true;
    std::uint64_t budget = default_budget();
};

/// Isomorphism invariants: tr phi, rank(phi - I), eps(theta^k) and tr L_{theta^k} for k = 1..d.
inline std::vector<CycScalar> structure_invariants(const FrobAlgebra& fa, const ExtStructure& s)
{
    const CycField f = fa.field();
    const Mat id = Mat::identity(f, fa.dim());
    std::vector<CycScalar> out{trace(s.phi), CycScalar(f, static_cast<long>(rank(s.phi - id)))};
    Vec p = fa.u();
    for (std::size_t k = 1; k <= fa.dim(); ++k) {
        p = multiply(fa.algebra, p, s.theta);
        out.push_back((fa.eps() * p)[0]);
        out.push_back(trace(left_mult(fa.algebra, p)));
    }
    return out;
}

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (b < a)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

} // namespace detail

/// Enumerate (phi, theta) over the lattice and group into isomorphism classes.
inline Classification classify_extended(const FrobAlgebra& fa, const CandidateLattice& lattice,
                                        const std::vector<Mat>& witnesses = {}, const ClassifyOptions& opts = {})
{
    validate_shapes(fa);
    detail::require_search_dim(fa.dim());
    Classification out;
    out.involutions = find_frobenius_involutions(fa, lattice, opts.budget);
    for (const Mat& phi : out.involutions) {
        ThetaSolutions ts = solve_theta(fa, phi, lattice, opts.budget);
        for (auto& fam : ts.families)
            out.structures.push_back({ExtStructure{phi, fam.basepoint}, fam.directions});
    }
    std::sort(out.structures.begin(), out.structures.end(),
              [](const ClassifiedStructure& a, const ClassifiedStructure& b) {
                  const int c = compare(a.ext.phi, b.ext.phi);
                  return c != 0 ? c < 0 : compare(a.ext.theta, b.ext.theta) < 0;
              });
    const std::size_t n = out.structures.size();
    std::vector<ExtFrobAlgebra> ext;
    for (const auto& s : out.structures)
        ext.push_back({fa, s.ext});
    detail::UnionFind uf(n);

    for (std::size_t w = 0; w < witnesses.size(); ++w) {
        const Mat& f = witnesses[w];
        auto finv = inverse(f);
        if (!finv)
            continue;
        for (std::size_t i = 0; i < n; ++i) {
            const ExtStructure image{f * ext[i].ext.phi * *finv, f * ext[i].ext.theta};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || !(ext[j].ext == image))
                    continue;
                if (check_ext_morphism(ext[i], ext[j], f).passed()) {
                    out.links.push_back({i, j, "witness " + std::to_string(w), f});
                    uf.unite(i, j);
                }
            }
        }
    }

    std::vector<std::vector<CycScalar>> inv;
    for (const auto& s : out.structures)
        inv.push_back(structure_invariants(fa, s.ext));
    auto separated = [&](std::size_t i, std::size_t j) {
        return inv[i] != inv[j] || lemma_no_morphism_obstruction(ext[i], ext[j]) == Obstruction::obstructed ||
               lemma_no_morphism_obstruction(ext[j], ext[i]) == Obstruction::obstructed;
    };

    if (opts.witness_search) {
        const CandidateLattice& wl = opts.witness_lattice ? *opts.witness_lattice : lattice;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (uf.find(i) != i || uf.find(j) == uf.find(i) || separated(i, j))
                    continue;
                auto found = find_ext_morphisms(ext[i], ext[j], wl, true, opts.budget);
                if (!found.empty() && check_ext_morphism(ext[i], ext[j], found.front()).passed()) {
                    out.links.push_back({i, j, "search", found.front()});
                    uf.unite(i, j);
                }
            }
        }
    }

    std::vector<std::vector<std::size_t>> by_root(n);
    for (std::size_t i = 0; i < n; ++i)
        by_root[uf.find(i)].push_back(i);
    for (auto& c : by_root)
        if (!c.empty())
            out.classes.push_back(std::move(c));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (uf.find(i) != uf.find(j) && !separated(i, j))
                out.unresolved.push_back({i, j});
    return out;
}

} // namespace frobex

#endif // FROBEX_SEARCH_HPP
