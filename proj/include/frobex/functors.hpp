#ifndef FROBEX_FUNCTORS_HPP
#define FROBEX_FUNCTORS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobex/extended.hpp"

namespace frobex {

/// A (x) B with m = (m_A x m_B)(I x c_(B,A) x I), phi = phi_A x phi_B, theta = theta_A x theta_B.
inline ExtFrobAlgebra tensor_product_ext(const ExtFrobAlgebra& a, const ExtFrobAlgebra& b)
{
    validate_shapes(a);
    validate_shapes(b);
    require_same_field(a.field(), b.field());
    const CycField f = a.field();
    const std::size_t da = a.dim(), db = b.dim();
    const Mat ia = Mat::identity(f, da), ib = Mat::identity(f, db);
    std::vector<std::string> labels;
    for (const auto& x : a.frob.labels())
        for (const auto& y : b.frob.labels())
            labels.push_back(x + "*" + y);
    Mat m = kron(a.frob.m(), b.frob.m()) * kron(kron(ia, swap_map(db, da, f)), ib);
    Mat delta = kron(kron(ia, swap_map(da, db, f)), ib) * kron(a.frob.delta(), b.frob.delta());
    AlgebraData alg{f, da * db, std::move(labels), std::move(m), kron(a.frob.u(), b.frob.u())};
    CoalgebraData co{f, da * db, std::move(delta), kron(a.frob.eps(), b.frob.eps())};
    return {{std::move(alg), std::move(co)}, {kron(a.ext.phi, b.ext.phi), kron(a.ext.theta, b.ext.theta)}};
}

namespace detail {

/// Embedding of (da x da) and (db x db) tensor indices into (da + db)^2.
inline Mat block_tensor_inclusion(CycField f, std::size_t da, std::size_t db)
{
    const std::size_t s = da + db;
    Mat r(f, s * s, da * da + db * db);
    const CycScalar one(f, 1L);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            r.set(i * s + j, i * da + j, one);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            r.set((da + i) * s + da + j, da * da + i * db + j, one);
    return r;
}

} // namespace detail

/// A x B with block-diagonal structure maps; the zero-dimensional algebra is its unit.
inline ExtFrobAlgebra biproduct_ext(const ExtFrobAlgebra& a, const ExtFrobAlgebra& b)
{
    validate_shapes(a);
    validate_shapes(b);
    require_same_field(a.field(), b.field());
    const CycField f = a.field();
    const std::size_t da = a.dim(), db = b.dim(), d = da + db;
    std::vector<std::string> labels = a.frob.labels();
    for (const auto& y : b.frob.labels())
        labels.push_back(y + "'");
    const Mat inc = detail::block_tensor_inclusion(f, da, db);
    Mat m = direct_sum(a.frob.m(), b.frob.m()) * inc.transpose();
    Mat delta = inc * direct_sum(a.frob.delta(), b.frob.delta());
    Mat eps = Mat::row(direct_sum(a.frob.eps().row_vec(0), b.frob.eps().row_vec(0)));
    AlgebraData alg{f, d, std::move(labels), std::move(m), direct_sum(a.frob.u(), b.frob.u())};
    CoalgebraData co{f, d, std::move(delta), std::move(eps)};
    return {{std::move(alg), std::move(co)},
            {direct_sum(a.ext.phi, b.ext.phi), direct_sum(a.ext.theta, b.ext.theta)}};
}

/// The zero-dimensional extended Frobenius algebra.
inline ExtFrobAlgebra zero_ext_algebra(CycField f)
{
    AlgebraData alg{f, 0, {}, Mat(f, 0, 0), Vec(f, 0)};
    CoalgebraData co{f, 0, Mat(f, 0, 0), Mat(f, 1, 0)};
    return {{std::move(alg), std::move(co)}, {Mat(f, 0, 0), Vec(f, 0)}};
}

/// (k, I, sign 1).
inline ExtFrobAlgebra unit_ext_algebra(CycField f, int sign = 1)
{
    return {unit_frobenius(f), {Mat::identity(f, 1), Vec(f, {CycScalar(f, sign < 0 ? -1L : 1L)})}};
}

enum class FunctorKind { identity, tensor, biproduct, compose, modified };

namespace detail {

/// Evaluators of a Frobenius monoidal functor with its extension data, at objects k^x.
class FunctorNode {
public:
    virtual ~FunctorNode() = default;
    virtual FunctorKind kind() const = 0;
    virtual std::string name() const = 0;
    virtual CycField field() const = 0;
    virtual std::size_t obj(std::size_t x) const = 0;
    /// F(f) for f : k^a -> k^b given as a b x a matrix.
    virtual Mat map(const Mat& f) const = 0;
    /// F2(x,y) : F(x) F(y) -> F(xy).
    virtual Mat mon2(std::size_t x, std::size_t y) const = 0;
    virtual Mat mon0() const = 0;
    /// F_2(x,y) : F(xy) -> F(x) F(y).
    virtual Mat comon2(std::size_t x, std::size_t y) const = 0;
    virtual Mat comon0() const = 0;
    virtual Mat hat(std::size_t x) const = 0;
    virtual Mat check() const = 0;
};

} // namespace detail

class RealizedFunctor {
public:
    explicit RealizedFunctor(std::shared_ptr<const detail::FunctorNode> node) : node_(std::move(node)) {}

    FunctorKind kind() const { return node_->kind(); }
    std::string name() const { return node_->name(); }
    CycField field() const { return node_->field(); }
    std::size_t obj(std::size_t x) const { return node_->obj(x); }
    Mat map(const Mat& f) const { return node_->map(f); }
    Mat F2(std::size_t x, std::size_t y) const { return node_->mon2(x, y); }
    Mat F0() const { return node_->mon0(); }
    Mat F_2(std::size_t x, std::size_t y) const { return node_->comon2(x, y); }
    Mat F_0() const { return node_->comon0(); }
    Mat Fhat(std::size_t x) const { return node_->hat(x); }
    Mat Fcheck() const { return node_->check(); }

private:
    std::shared_ptr<const detail::FunctorNode> node_;
};

namespace detail {

class IdentityNode final : public FunctorNode {
public:
    explicit IdentityNode(CycField f) : f_(f) {}
    FunctorKind kind() const override { return FunctorKind::identity; }
    std::string name() const override { return "Id"; }
    CycField field() const override { return f_; }
    std::size_t obj(std::size_t x) const override { return x; }
    Mat map(const Mat& f) const override { return f; }
    Mat mon2(std::size_t x, std::size_t y) const override { return Mat::identity(f_, x * y); }
    Mat mon0() const override { return Mat::identity(f_, 1); }
    Mat comon2(std::size_t x, std::size_t y) const override { return Mat::identity(f_, x * y); }
    Mat comon0() const override { return Mat::identity(f_, 1); }
    Mat hat(std::size_t x) const override { return Mat::identity(f_, x); }
    Mat check() const override { return Mat::identity(f_, 1); }

private:
    CycField f_;
};

/// - (x) B.
class TensorNode final : public FunctorNode {
public:
    TensorNode(ExtFrobAlgebra b, std::string label) : b_(std::move(b)), label_(std::move(label)) {}
    FunctorKind kind() const override { return FunctorKind::tensor; }
    std::string name() const override { return "TensorWith(" + label_ + ")"; }
    CycField field() const override { return b_.field(); }
    std::size_t obj(std::size_t x) const override { return x * b_.dim(); }
    Mat map(const Mat& f) const override { return kron(f, id(b_.dim())); }
    Mat mon2(std::size_t x, std::size_t y) const override
    {
        const std::size_t n = b_.dim();
        return kron(id(x * y), b_.frob.m()) * kron(kron(id(x), swap_map(n, y, field())), id(n));
    }
    Mat mon0() const override { return Mat::column(b_.frob.u()); }
    Mat comon2(std::size_t x, std::size_t y) const override
    {
        const std::size_t n = b_.dim();
        return kron(kron(id(x), swap_map(y, n, field())), id(n)) * kron(id(x * y), b_.frob.delta());
    }
    Mat comon0() const override { return b_.frob.eps(); }
    Mat hat(std::size_t x) const override { return kron(id(x), b_.ext.phi); }
    Mat check() const override { return Mat::column(b_.ext.theta); }

private:
    Mat id(std::size_t n) const { return Mat::identity(field(), n); }

    ExtFrobAlgebra b_;
    std::string label_;
};

/// - (+) B; objects k^x map to k^x (+) B with the X block first.
class BiproductNode final : public FunctorNode {
public:
    BiproductNode(ExtFrobAlgebra b, std::string label) : b_(std::move(b)), label_(std::move(label)) {}
    FunctorKind kind() const override { return FunctorKind::biproduct; }
    std::string name() const override { return "BiproductWith(" + label_ + ")"; }
    CycField field() const override { return b_.field(); }
    std::size_t obj(std::size_t x) const override { return x + b_.dim(); }
    Mat map(const Mat& f) const override { return direct_sum(f, Mat::identity(field(), b_.dim())); }
    Mat mon2(std::size_t x, std::size_t y) const override
    {
        const std::size_t n = b_.dim(), sy = y + n;
        Mat r(field(), x * y + n, (x + n) * sy);
        const CycScalar one(field(), 1L);
        for (std::size_t p = 0; p < x; ++p)
            for (std::size_t q = 0; q < y; ++q)
                r.set(p * y + q, p * sy + q, one);
        const Mat& m = b_.frob.m();
        for (std::size_t t = 0; t < n; ++t)
            for (const auto& [c, v] : m.row_entries(t))
                r.set(x * y + t, (x + c / n) * sy + y + c % n, v);
        return r;
    }
    Mat mon0() const override { return Mat::column(unit_plus(b_.frob.u())); }
    Mat comon2(std::size_t x, std::size_t y) const override
    {
        const std::size_t n = b_.dim(), sy = y + n;
        Mat r(field(), (x + n) * sy, x * y + n);
        const CycScalar one(field(), 1L);
        for (std::size_t p = 0; p < x; ++p)
            for (std::size_t q = 0; q < y; ++q)
                r.set(p * sy + q, p * y + q, one);
        const Mat& delta = b_.frob.delta();
        for (std::size_t t = 0; t < n * n; ++t)
            for (const auto& [c, v] : delta.row_entries(t))
                r.set((x + t / n) * sy + y + t % n, x * y + c, v);
        return r;
    }
    Mat comon0() const override { return Mat::row(unit_plus(b_.frob.eps().row_vec(0))); }
    Mat hat(std::size_t x) const override { return direct_sum(Mat::identity(field(), x), b_.ext.phi); }
    Mat check() const override { return Mat::column(unit_plus(b_.ext.theta)); }

private:
    Vec unit_plus(const Vec& v) const { return direct_sum(Vec(field(), {CycScalar(field(), 1L)}), v); }

    ExtFrobAlgebra b_;
    std::string label_;
};

/// G F with (GF)2 = G(F2) G2, (GF)_2 = G_2 G(F_2), hat = G(Fhat) Ghat, check = G(Fcheck) Gcheck.
class ComposeNode final : public FunctorNode {
public:
    ComposeNode(RealizedFunctor g, RealizedFunctor f) : g_(std::move(g)), f_(std::move(f)) {}
    FunctorKind kind() const override { return FunctorKind::compose; }
    std::string name() const override { return "Compose(" + g_.name() + ", " + f_.name() + ")"; }
    CycField field() const override { return g_.field(); }
    std::size_t obj(std::size_t x) const override { return g_.obj(f_.obj(x)); }
    Mat map(const Mat& m) const override { return g_.map(f_.map(m)); }
    Mat mon2(std::size_t x, std::size_t y) const override
    {
        return g_.map(f_.F2(x, y)) * g_.F2(f_.obj(x), f_.obj(y));
    }
    Mat mon0() const override { return g_.map(f_.F0()) * g_.F0(); }
    Mat comon2(std::size_t x, std::size_t y) const override
    {
        return g_.F_2(f_.obj(x), f_.obj(y)) * g_.map(f_.F_2(x, y));
    }
    Mat comon0() const override { return g_.F_0() * g_.map(f_.F_0()); }
    Mat hat(std::size_t x) const override { return g_.map(f_.Fhat(x)) * g_.Fhat(f_.obj(x)); }
    Mat check() const override { return g_.map(f_.Fcheck()) * g_.Fcheck(); }

private:
    RealizedFunctor g_;
    RealizedFunctor f_;
};

/// The same Frobenius monoidal functor with replaced extension data.
class ModifiedNode final : public FunctorNode {
public:
    ModifiedNode(RealizedFunctor base, bool identity_hat, std::optional<Mat> check, std::string tag)
        : base_(std::move(base)), identity_hat_(identity_hat), check_(std::move(check)), tag_(std::move(tag))
    {
    }
    FunctorKind kind() const override { return FunctorKind::modified; }
    std::string name() const override { return base_.name() + "[" + tag_ + "]"; }
    CycField field() const override { return base_.field(); }
    std::size_t obj(std::size_t x) const override { return base_.obj(x); }
    Mat map(const Mat& f) const override { return base_.map(f); }
    Mat mon2(std::size_t x, std::size_t y) const override { return base_.F2(x, y); }
    Mat mon0() const override { return base_.F0(); }
    Mat comon2(std::size_t x, std::size_t y) const override { return base_.F_2(x, y); }
    Mat comon0() const override { return base_.F_0(); }
    Mat hat(std::size_t x) const override
    {
        return identity_hat_ ? Mat::identity(field(), base_.obj(x)) : base_.Fhat(x);
    }
    Mat check() const override { return check_ ? *check_ : base_.Fcheck(); }

private:
    RealizedFunctor base_;
    bool identity_hat_;
    std::optional<Mat> check_;
    std::string tag_;
};

} // namespace detail

inline RealizedFunctor identity_functor(CycField f)
{
    return RealizedFunctor(std::make_shared<detail::IdentityNode>(f));
}

/// - (x) B without validating B.
inline RealizedFunctor tensor_with(const ExtFrobAlgebra& b, std::string label = "B")
{
    validate_shapes(b);
    return RealizedFunctor(std::make_shared<detail::TensorNode>(b, std::move(label)));
}

/// - (+) B without validating B.
inline RealizedFunctor biproduct_with(const ExtFrobAlgebra& b, std::string label = "B")
{
    validate_shapes(b);
    return RealizedFunctor(std::make_shared<detail::BiproductNode>(b, std::move(label)));
}

/// TensorWith or BiproductWith an extended Frobenius algebra B.
inline RealizedFunctor realize_functor(FunctorKind kind, const ExtFrobAlgebra& b, std::string label = "B")
{
    const Report r = check_extended(b);
    if (!r.passed())
        throw PreconditionError("B is not an extended Frobenius algebra: " + r.failures().front());
    switch (kind) {
    case FunctorKind::tensor:
        return tensor_with(b, std::move(label));
    case FunctorKind::biproduct:
        return biproduct_with(b, std::move(label));
    default:
        throw PreconditionError("realize_functor accepts only tensor or biproduct kinds");
    }
}

/// The extension (Id, F0) of a Frobenius monoidal functor.
inline RealizedFunctor with_trivial_extension(const RealizedFunctor& f)
{
    return RealizedFunctor(std::make_shared<detail::ModifiedNode>(f, true, f.F0(), "hat=Id,check=F0"));
}

/// F with its check morphism replaced.
inline RealizedFunctor with_check(const RealizedFunctor& f, const Mat& check, std::string tag = "check")
{
    detail::require_shape(check, f.obj(1), 1, "check");
    return RealizedFunctor(std::make_shared<detail::ModifiedNode>(f, false, check, std::move(tag)));
}

/// Test objects k^x and sample morphisms for naturality.
struct SampleMorphism {
    std::size_t src = 0;
    std::size_t dst = 0;
    Mat map;
};

struct ObjectSample {
    std::vector<std::size_t> dims;
    std::vector<SampleMorphism> morphisms;
    std::uint64_t seed = 0;
};

/// Dims with per_pair random morphisms for every ordered pair, entries drawn from {-2,...,2}.
inline ObjectSample make_sample(CycField f, std::vector<std::size_t> dims, std::size_t per_pair = 5,
                                std::uint64_t seed = 1)
{
    for (std::size_t d : dims)
        if (d == 0)
            throw PreconditionError("sample dims must be positive");
    ObjectSample s{dims, {}, seed};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-2, 2);
    for (std::size_t a : dims)
        for (std::size_t b : dims)
            for (std::size_t k = 0; k < per_pair; ++k) {
                Mat m(f, b, a);
                for (std::size_t i = 0; i < b; ++i)
                    for (std::size_t j = 0; j < a; ++j)
                        m.set(i, j, CycScalar(f, dist(rng)));
                s.morphisms.push_back({a, b, std::move(m)});
            }
    return s;
}

namespace detail {

inline void validate_sample(const ObjectSample& s, CycField f)
{
    for (std::size_t d : s.dims)
        if (d == 0)
            throw PreconditionError("sample dims must be positive");
    for (const auto& m : s.morphisms) {
        require_shape(m.map, m.dst, m.src, "sample morphism");
        require_same_field(f, m.map.field());
    }
}

inline std::string dims_text(std::initializer_list<std::size_t> d)
{
    std::string s = "(";
    for (std::size_t v : d)
        s += (s.size() > 1 ? "," : "") + std::to_string(v);
    return s + ")";
}

/// One report item per equation; the first failing instance is named.
class EquationLog {
public:
    void expect(const std::string& name, const std::string& where, const Mat& lhs, const Mat& rhs)
    {
        auto [it, fresh] = index_.try_emplace(name, items_.size());
        if (fresh)
            items_.push_back({name, true, {}});
        CheckItem& item = items_[it->second];
        if (!item.passed)
            return;
        if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
            item.passed = false;
            item.detail = "at " + where + ": shapes " + lhs.shape() + " vs " + rhs.shape();
            return;
        }
        if (auto diff = lhs.first_difference(rhs)) {
            item.passed = false;
            item.detail = "at " + where + ", entry (" + std::to_string(diff->first) + "," +
                          std::to_string(diff->second) + "): " + lhs.at(diff->first, diff->second).to_string() +
                          " vs " + rhs.at(diff->first, diff->second).to_string();
        }
    }

    Report report() const
    {
        Report r;
        for (const auto& it : items_)
            r.add(it.name, it.passed, it.detail);
        return r;
    }

private:
    std::vector<CheckItem> items_;
    std::map<std::string, std::size_t> index_;
};

} // namespace detail

/// (Co)associativity, (co)unitality, both Frobenius conditions and naturality of F2, F_2 on the sample.
inline Report check_frobenius_functor(const RealizedFunctor& F, const ObjectSample& sample)
{
    const CycField f = F.field();
    detail::validate_sample(sample, f);
    auto id = [&](std::size_t n) { return Mat::identity(f, n); };
    detail::EquationLog log;
    const Mat f0 = F.F0(), f_0 = F.F_0();
    for (std::size_t x : sample.dims) {
        const std::size_t fx = F.obj(x);
        const std::string at = detail::dims_text({x});
        log.expect("monoidal.unitality_left", at, F.F2(1, x) * kron(f0, id(fx)), id(fx));
        log.expect("monoidal.unitality_right", at, F.F2(x, 1) * kron(id(fx), f0), id(fx));
        log.expect("comonoidal.counitality_left", at, kron(f_0, id(fx)) * F.F_2(1, x), id(fx));
        log.expect("comonoidal.counitality_right", at, kron(id(fx), f_0) * F.F_2(x, 1), id(fx));
        for (std::size_t y : sample.dims)
            for (std::size_t z : sample.dims) {
                const std::string w = detail::dims_text({x, y, z});
                const std::size_t fz = F.obj(z);
                log.expect("monoidal.associativity", w, F.F2(x * y, z) * kron(F.F2(x, y), id(fz)),
                           F.F2(x, y * z) * kron(id(fx), F.F2(y, z)));
                log.expect("comonoidal.coassociativity", w, kron(F.F_2(x, y), id(fz)) * F.F_2(x * y, z),
                           kron(id(fx), F.F_2(y, z)) * F.F_2(x, y * z));
                log.expect("frobenius.first", w, kron(F.F2(x, y), id(fz)) * kron(id(fx), F.F_2(y, z)),
                           F.F_2(x * y, z) * F.F2(x, y * z));
                log.expect("frobenius.second", w, kron(id(fx), F.F2(y, z)) * kron(F.F_2(x, y), id(fz)),
                           F.F_2(x, y * z) * F.F2(x * y, z));
            }
    }
    for (std::size_t k = 0; k < sample.morphisms.size(); ++k) {
        const auto& s = sample.morphisms[k];
        const Mat ff = F.map(s.map);
        for (std::size_t y : sample.dims) {
            const std::string w = "morphism " + std::to_string(k) + ", y=" + std::to_string(y);
            const Mat iy = id(y), fy = id(F.obj(y));
            log.expect("naturality.F2_left", w, F.F2(s.dst, y) * kron(ff, fy), F.map(kron(s.map, iy)) * F.F2(s.src, y));
            log.expect("naturality.F2_right", w, F.F2(y, s.dst) * kron(fy, ff), F.map(kron(iy, s.map)) * F.F2(y, s.src));
            log.expect("naturality.F_2_left", w, kron(ff, fy) * F.F_2(s.src, y), F.F_2(s.dst, y) * F.map(kron(s.map, iy)));
            log.expect("naturality.F_2_right", w, kron(fy, ff) * F.F_2(y, s.src), F.F_2(y, s.dst) * F.map(kron(iy, s.map)));
        }
    }
    return log.report();
}

/// F2(x,y) F_2(x,y) = I for all sampled x, y.
inline bool check_separable_functor(const RealizedFunctor& F, const ObjectSample& sample)
{
    detail::validate_sample(sample, F.field());
    for (std::size_t x : sample.dims)
        for (std::size_t y : sample.dims)
            if (!(F.F2(x, y) * F.F_2(x, y)).is_identity())
                return false;
    return true;
}

/// (a) Fhat a Frobenius monoidal natural transformation, (b) the Fcheck square, (c)(i)-(iii), on the sample.
inline Report check_extended_functor(const RealizedFunctor& F, const ObjectSample& sample)
{
    const Report pre = check_frobenius_functor(F, sample);
    if (!pre.passed())
        throw PreconditionError("not a Frobenius monoidal functor: " + pre.failures().front());
    const CycField f = F.field();
    auto id = [&](std::size_t n) { return Mat::identity(f, n); };
    detail::EquationLog log;
    const Mat f0 = F.F0(), f_0 = F.F_0(), chk = F.Fcheck(), h1 = F.Fhat(1);
    const std::size_t f1 = F.obj(1);
    detail::require_shape(chk, f1, 1, "check");
    for (std::size_t k = 0; k < sample.morphisms.size(); ++k) {
        const auto& s = sample.morphisms[k];
        const Mat ff = F.map(s.map);
        log.expect("a.naturality", "morphism " + std::to_string(k), F.Fhat(s.dst) * ff, ff * F.Fhat(s.src));
    }
    log.expect("a.monoidal_unit", "()", h1 * f0, f0);
    log.expect("a.comonoidal_counit", "()", f_0 * h1, f_0);
    for (std::size_t x : sample.dims)
        for (std::size_t y : sample.dims) {
            const std::string w = detail::dims_text({x, y});
            log.expect("a.monoidal", w, F.Fhat(x * y) * F.F2(x, y), F.F2(x, y) * kron(F.Fhat(x), F.Fhat(y)));
            log.expect("a.comonoidal", w, kron(F.Fhat(x), F.Fhat(y)) * F.F_2(x, y), F.F_2(x, y) * F.Fhat(x * y));
        }
    log.expect("b.check_square", "()", F.F2(1, 1) * kron(h1, id(f1)) * F.F_2(1, 1) * f0,
               F.F2(1, 1) * kron(chk, chk));
    for (std::size_t x : sample.dims) {
        const std::string at = detail::dims_text({x});
        const Mat hx = F.Fhat(x);
        const std::size_t fx = F.obj(x);
        log.expect("c.i.involution", at, hx * hx, id(fx));
        const Mat side = F.F2(1, x) * kron(chk, id(fx));
        log.expect("c.ii.check_invariance", at, hx * side, side);
        for (std::size_t y : sample.dims) {
            const std::size_t xy = x * y;
            log.expect("c.iii.hat_transfer", detail::dims_text({x, y}),
                       F.F2(x, y) * kron(hx, id(F.obj(y))) * F.F_2(x, y),
                       F.F2(xy, 1) * kron(F.Fhat(xy), id(f1)) * F.F_2(xy, 1));
        }
    }
    return log.report();
}

/// Sample {1, d} with the structure maps of A as the naturality witnesses.
inline ObjectSample structure_sample(const ExtFrobAlgebra& a)
{
    const std::size_t d = a.dim();
    ObjectSample s;
    s.dims = d > 1 ? std::vector<std::size_t>{1, d} : std::vector<std::size_t>{1};
    s.morphisms = {{d * d, d, a.frob.m()},        {1, d, Mat::column(a.frob.u())}, {d, d * d, a.frob.delta()},
                   {d, 1, a.frob.eps()},          {d, d, a.ext.phi},               {1, d, Mat::column(a.ext.theta)}};
    return s;
}

/// F(A) with m = F(m_A) F2, u = F(u_A) F0, Delta = F_2 F(Delta_A), eps = F_0 F(eps_A),
/// phi = F(phi_A) Fhat_A, theta = F(theta_A) Fcheck.
inline ExtFrobAlgebra apply_functor(const RealizedFunctor& F, const ExtFrobAlgebra& a)
{
    const Report ra = check_extended(a);
    if (!ra.passed())
        throw PreconditionError("A is not an extended Frobenius algebra: " + ra.failures().front());
    require_same_field(F.field(), a.field());
    if (a.dim() == 0)
        throw PreconditionError("apply_functor requires a positive-dimensional algebra");
    const Report rf = check_extended_functor(F, structure_sample(a));
    if (!rf.passed())
        throw PreconditionError("not an extended Frobenius monoidal functor: " + rf.failures().front());
    const std::size_t d = a.dim(), fd = F.obj(d);
    const CycField f = a.field();
    Mat m = F.map(a.frob.m()) * F.F2(d, d);
    Vec u = (F.map(Mat::column(a.frob.u())) * F.F0()).column_vec(0);
    Mat delta = F.F_2(d, d) * F.map(a.frob.delta());
    Mat eps = F.F_0() * F.map(a.frob.eps());
    Mat phi = F.map(a.ext.phi) * F.Fhat(d);
    Vec theta = (F.map(Mat::column(a.ext.theta)) * F.Fcheck()).column_vec(0);
    AlgebraData alg{f, fd, default_labels(fd), std::move(m), std::move(u)};
    CoalgebraData co{f, fd, std::move(delta), std::move(eps)};
    return {{std::move(alg), std::move(co)}, {std::move(phi), std::move(theta)}};
}

/// G after F; both must pass check_extended_functor on the sample.
inline RealizedFunctor compose_functors(const RealizedFunctor& G, const RealizedFunctor& F, const ObjectSample& sample)
{
    require_same_field(G.field(), F.field());
    for (const RealizedFunctor* x : {&G, &F}) {
        const Report r = check_extended_functor(*x, sample);
        if (!r.passed())
            throw PreconditionError(x->name() + " is not extended: " + r.failures().front());
    }
    return RealizedFunctor(std::make_shared<detail::ComposeNode>(G, F));
}

} // namespace frobex

#endif // FROBEX_FUNCTORS_HPP
