#ifndef FROBEX_ACCEPTANCE_HPP
#define FROBEX_ACCEPTANCE_HPP

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "frobex/catalog.hpp"
#include "frobex/functors.hpp"
#include "frobex/hopf.hpp"

namespace frobex {

enum class CriterionStatus { pass, fail, evidence };

struct CriterionResult {
    int number = 0;
    std::string title;
    CriterionStatus status = CriterionStatus::fail;
    std::string detail;
    long long millis = 0;
    long long bound_millis = 0; // 0: no bound
};

struct AcceptanceRun {
    std::vector<CriterionResult> results;

    /// Evidence lines never block.
    bool passed() const
    {
        return std::all_of(results.begin(), results.end(),
                           [](const CriterionResult& r) { return r.status != CriterionStatus::fail; });
    }
};

inline std::string format_criterion(const CriterionResult& r)
{
    std::ostringstream os;
    const char* tag = r.status == CriterionStatus::pass ? "PASS" : r.status == CriterionStatus::fail ? "FAIL" : "EVIDENCE";
    os << "criterion " << (r.number < 10 ? " " : "") << r.number << ": " << tag << "  " << r.title << "  [" << r.millis
       << " ms";
    if (r.bound_millis > 0)
        os << " / bound " << r.bound_millis << " ms";
    os << "]";
    if (!r.detail.empty())
        os << "\n    " << r.detail;
    return os.str();
}

namespace detail {

/// Every extended Frobenius algebra met during the run, for the key identity sweep.
struct StructurePool {
    std::vector<ExtFrobAlgebra> items;

    void add(const ExtFrobAlgebra& e) { items.push_back(e); }

    void add(const FrobAlgebra& fa, const Classification& c)
    {
        for (const auto& s : c.structures) {
            items.push_back({fa, s.ext});
            for (const auto& d : s.directions)
                items.push_back({fa, {s.ext.phi, s.ext.theta + d}});
        }
    }
};

/// Accumulates sub-checks of one criterion.
class Verdict {
public:
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            ok_ = false;
            failures_.push_back(what);
        }
    }
    void note(std::string text) { notes_.push_back(std::move(text)); }
    bool ok() const { return ok_; }

    std::string text() const
    {
        std::string out;
        for (const auto& f : failures_)
            out += (out.empty() ? "" : "; ") + ("failed: " + f);
        for (const auto& n : notes_)
            out += (out.empty() ? "" : "; ") + n;
        return out;
    }

private:
    bool ok_ = true;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

inline bool same_structure_set(const Classification& c, std::vector<ExtStructure> expected)
{
    if (c.structures.size() != expected.size())
        return false;
    for (const auto& s : c.structures) {
        if (!s.directions.empty())
            return false;
        auto it = std::find(expected.begin(), expected.end(), s.ext);
        if (it == expected.end())
            return false;
        expected.erase(it);
    }
    return expected.empty();
}

inline std::vector<ExtStructure> claimed_structures(const Family& fam)
{
    std::vector<ExtStructure> out;
    for (const auto& c : fam.claimed)
        out.push_back(c.ext);
    return out;
}

/// Index of the structure with no directions equal to s, or size() when absent.
inline std::size_t structure_index(const Classification& c, const ExtStructure& s)
{
    for (std::size_t i = 0; i < c.structures.size(); ++i)
        if (c.structures[i].directions.empty() && c.structures[i].ext == s)
            return i;
    return c.structures.size();
}

/// Number of distinct classes met by the given structures.
inline std::size_t classes_met(const Classification& c, const std::vector<ExtStructure>& list)
{
    std::vector<std::size_t> seen;
    for (const auto& s : list) {
        const std::size_t i = structure_index(c, s);
        for (std::size_t k = 0; k < c.classes.size(); ++k)
            if (std::find(c.classes[k].begin(), c.classes[k].end(), i) != c.classes[k].end() &&
                std::find(seen.begin(), seen.end(), k) == seen.end())
                seen.push_back(k);
    }
    return seen.size();
}

/// Classes of the list when only the given witness maps may join structures.
inline std::size_t witness_classes(const FrobAlgebra& fa, const std::vector<ExtStructure>& list,
                                   const std::vector<Mat>& witnesses)
{
    UnionFind uf(list.size());
    for (const Mat& w : witnesses) {
        const auto winv = inverse(w);
        if (!winv)
            continue;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const ExtStructure image{w * list[i].phi * *winv, w * list[i].theta};
            for (std::size_t j = 0; j < list.size(); ++j)
                if (j != i && list[j] == image && check_ext_morphism({fa, list[i]}, {fa, list[j]}, w).passed())
                    uf.unite(i, j);
        }
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < list.size(); ++i)
        n += uf.find(i) == i ? 1 : 0;
    return n;
}

inline std::string count_text(std::size_t n, const std::string& what) { return std::to_string(n) + " " + what; }

/// phi(g) = c g^j with (j = 1 and c = 1, or -1 for even n) or (j = n - 1 and c^n = 1).
inline bool conjectured_shape(const Mat& phi, std::size_t n)
{
    const CycField f = phi.field();
    const Vec col = phi.column_vec(1);
    std::size_t j = n, nonzero = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (!col[k].is_zero()) {
            j = k;
            ++nonzero;
        }
    if (nonzero != 1)
        return false;
    const CycScalar c = col[j];
    if (phi != cyclic_map(f, n, c, j))
        return false;
    if (j == 1)
        return c == CycScalar(f, 1L) || (n % 2 == 0 && c == CycScalar(f, -1L));
    if (j == n - 1) {
        CycScalar p(f, 1L);
        for (std::size_t k = 0; k < n; ++k)
            p *= c;
        return p == CycScalar(f, 1L);
    }
    return false;
}

/// The groups used by the Hopf criteria.
inline std::vector<GroupTable> hopf_groups()
{
    return {cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four_group(),
            cyclic_group(5), cyclic_group(6), symmetric_group_3()};
}

inline ExtFrobAlgebra c2_sqrt2(CycField f) { return group_phi_trivial_extension(cyclic_group(2), 1, f); }

inline ExtFrobAlgebra c2_negation(CycField f)
{
    Mat phi(f, 2, 2);
    phi.set(0, 0, CycScalar(f, 1L));
    phi.set(1, 1, CycScalar(f, -1L));
    return {group_algebra(cyclic_group(2), f), {phi, Vec(f, 2)}};
}

/// One structure per catalog family, and Mat_2, over a common field.
inline std::vector<std::pair<std::string, ExtFrobAlgebra>> catalog_representatives(CycField f)
{
    std::vector<std::pair<std::string, ExtFrobAlgebra>> out;
    for (const char* name : {"k", "CR", "nil3", "kC2", "kC3", "kC4", "klein", "T2"}) {
        const Family fam = catalog_family(name, f.conductor());
        out.push_back({name, {fam.algebra, fam.claimed.front().ext}});
    }
    out.push_back({"Mat2", matrix_algebra(2, f)});
    return out;
}

} // namespace detail

/// Runs criteria 1 to 19 and writes one line per criterion, in order, to out.
inline AcceptanceRun run_acceptance(std::ostream* out = nullptr)
{
    using clock = std::chrono::steady_clock;
    AcceptanceRun run;
    detail::StructurePool pool;
    reset_morphism_audit();

    auto criterion = [&](int number, std::string title, long long bound, const std::function<void(detail::Verdict&)>& body,
                         bool evidence = false) {
        detail::Verdict v;
        const auto start = clock::now();
        try {
            body(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
        if (bound > 0)
            v.require(ms < bound, "runtime " + std::to_string(ms) + " ms exceeds bound");
        CriterionResult r{number, std::move(title), CriterionStatus::pass, v.text(), ms, bound};
        if (evidence)
            r.status = CriterionStatus::evidence;
        else if (!v.ok())
            r.status = CriterionStatus::fail;
        run.results.push_back(std::move(r));
    };

    criterion(1, "ground field: exactly (id, 1) and (id, -1) in 2 classes", 1000, [&](detail::Verdict& v) {
        const CycField f = field_make(1);
        const FrobAlgebra fa = unit_frobenius(f);
        const CandidateLattice lattice = CandidateLattice::symmetric(f, {CycScalar(f, 1L)}, "{0,+-1}");
        const Classification c = classify_extended(fa, lattice);
        pool.add(fa, c);
        const Mat id = Mat::identity(f, 1);
        v.require(detail::same_structure_set(c, {{id, Vec(f, {CycScalar(f, 1L)})}, {id, Vec(f, {CycScalar(f, -1L)})}}),
                  "structure set");
        v.require(c.classes.size() == 2, "class count " + std::to_string(c.classes.size()));
        v.note(detail::count_text(c.structures.size(), "structures") + ", " + detail::count_text(c.classes.size(), "classes"));
    });

    criterion(2, "C over R: exactly (id, sqrt2), (id, -sqrt2), (conj, 0), pairwise non-isomorphic", 1000,
              [&](detail::Verdict& v) {
                  const Family fam = catalog_family("CR");
                  const Classification c = classify_family(fam);
                  pool.add(fam.algebra, c);
                  v.require(detail::same_structure_set(c, detail::claimed_structures(fam)), "structure set");
                  v.require(c.classes.size() == 3, "class count " + std::to_string(c.classes.size()));
                  v.require(c.unresolved.empty(), "unresolved pairs remain");
                  v.note(detail::count_text(c.structures.size(), "structures") + ", " +
                         detail::count_text(c.classes.size(), "classes"));
              });

    criterion(3, "k[x]/(x^n): none for n = 2, 4, 6; sqrt(n) x^((n-1)/2) family for n = 3, 5", 5000,
              [&](detail::Verdict& v) {
                  for (std::size_t n = 2; n <= 6; ++n) {
                      const Family fam = catalog_family("nil" + std::to_string(n));
                      const Classification c = classify_family(fam);
                      pool.add(fam.algebra, c);
                      const std::string tag = "n=" + std::to_string(n);
                      if (n % 2 == 0) {
                          v.require(c.structures.empty(), tag + " should have no structures");
                          continue;
                      }
                      const CycField f = fam.algebra.field();
                      const CycScalar rn = sqrt_rational(f, static_cast<unsigned>(n));
                      std::vector<Vec> dirs;
                      for (std::size_t j = (n + 1) / 2; j < n; ++j)
                          dirs.push_back(Vec::basis(f, n, j));
                      std::vector<Vec> bases;
                      for (const auto& s : c.structures) {
                          v.require(s.ext.phi.is_identity(), tag + " phi-trivial");
                          std::vector<Vec> got = s.directions;
                          std::sort(got.begin(), got.end(), [](const Vec& a, const Vec& b) { return compare(a, b) < 0; });
                          std::vector<Vec> want = dirs;
                          std::sort(want.begin(), want.end(), [](const Vec& a, const Vec& b) { return compare(a, b) < 0; });
                          v.require(got == want, tag + " tail directions");
                          bases.push_back(s.ext.theta);
                      }
                      const Vec top = rn * Vec::basis(f, n, (n - 1) / 2);
                      const bool both = bases.size() == 2 && std::find(bases.begin(), bases.end(), top) != bases.end() &&
                                        std::find(bases.begin(), bases.end(), -top) != bases.end();
                      v.require(both, tag + " basepoints +-sqrt" + std::to_string(n) + " x^" + std::to_string((n - 1) / 2));
                  }
              });

    criterion(4, "kC2: 6 structures, 4 classes, g -> -g joins (id, +-sqrt2 g), none unresolved", 5000,
              [&](detail::Verdict& v) {
                  const Family fam = catalog_family("kC2");
                  const Classification c = classify_family(fam);
                  pool.add(fam.algebra, c);
                  const CycField f = fam.algebra.field();
                  v.require(c.structures.size() == 6, "structure count " + std::to_string(c.structures.size()) + ", expected 6");
                  v.require(c.classes.size() == 4, "class count " + std::to_string(c.classes.size()));
                  v.require(c.unresolved.empty(), "unresolved pairs remain");
                  const CycScalar r2 = sqrt_rational(f, 2);
                  const Mat id = Mat::identity(f, 2);
                  const std::size_t a = detail::structure_index(c, {id, r2 * Vec::basis(f, 2, 1)});
                  const std::size_t b = detail::structure_index(c, {id, -r2 * Vec::basis(f, 2, 1)});
                  const bool linked = std::any_of(c.links.begin(), c.links.end(), [&](const ClassLink& l) {
                      return l.via == "witness 0" && ((l.from == a && l.to == b) || (l.from == b && l.to == a));
                  });
                  v.require(linked, "witness link between (id, sqrt2 g) and (id, -sqrt2 g)");
                  v.note(detail::count_text(c.structures.size(), "structures") + ", " +
                         detail::count_text(c.classes.size(), "classes") + ", " +
                         detail::count_text(c.unresolved.size(), "unresolved"));
              });

    criterion(5, "kC3: listed (a)/(b) structures pass and are pairwise non-isomorphic", 10000, [&](detail::Verdict& v) {
        const Family fam = catalog_family("kC3");
        const auto listed = detail::claimed_structures(fam);
        std::size_t good = 0;
        for (const auto& s : listed) {
            if (check_extended({fam.algebra, s}).passed()) {
                pool.add({fam.algebra, s});
                ++good;
            }
        }
        v.require(good == listed.size(), std::to_string(listed.size() - good) + " listed structures fail check_extended");
        const Classification c = classify_family(fam);
        pool.add(fam.algebra, c);
        const std::size_t met = detail::classes_met(c, listed);
        v.require(met == listed.size(), "listed structures fall into " + std::to_string(met) + " classes, expected " +
                                            std::to_string(listed.size()));
        v.note(std::to_string(good) + "/" + std::to_string(listed.size()) + " listed pass; classifier: " +
               detail::count_text(c.structures.size(), "structures") + ", " +
               detail::count_text(c.classes.size(), "classes"));
    });

    criterion(6, "kC4: listed structures pass; witnesses f(g) = -g, f'(g) = ig give 8 classes", 30000,
              [&](detail::Verdict& v) {
                  const Family fam = catalog_family("kC4");
                  std::vector<ExtStructure> valid;
                  std::vector<std::string> bad;
                  for (const auto& c : fam.claimed) {
                      if (check_extended({fam.algebra, c.ext}).passed()) {
                          pool.add({fam.algebra, c.ext});
                          valid.push_back(c.ext);
                      } else
                          bad.push_back(c.label);
                  }
                  v.require(bad.empty(), std::to_string(bad.size()) + " of " + std::to_string(fam.claimed.size()) +
                                             " listed structures fail check_extended" +
                                             (bad.empty() ? "" : " (first: " + bad.front() + ")"));
                  const std::size_t k = detail::witness_classes(fam.algebra, valid, fam.witnesses);
                  v.require(k == 8, "witness grouping gives " + std::to_string(k) + " classes");
                  const Classification c = classify_family(fam);
                  pool.add(fam.algebra, c);
                  v.note("witness grouping of " + std::to_string(valid.size()) + " valid listed structures: " +
                         std::to_string(k) + " classes; classifier: " +
                         detail::count_text(c.structures.size(), "structures") + ", " +
                         detail::count_text(c.classes.size(), "classes") + ", " +
                         detail::count_text(c.unresolved.size(), "unresolved"));
              });

    criterion(7, "Klein four: every listed structure (a)-(d) over all index permutations passes", 5000,
              [&](detail::Verdict& v) {
                  const auto list = klein_four_extensions(field_make(1));
                  std::size_t good = 0;
                  for (const auto& e : list) {
                      if (check_extended(e).passed()) {
                          pool.add(e);
                          ++good;
                      }
                  }
                  v.require(good == list.size() && !list.empty(), "some structures fail");
                  v.note(std::to_string(good) + "/" + std::to_string(list.size()) + " pass");
              });

    criterion(8, "T2(-1): involutions {id}; theta solutions exactly span{x, gx} with theta^2 = 0", 5000,
              [&](detail::Verdict& v) {
                  const Family fam = catalog_family("T2");
                  const CycField f = fam.algebra.field();
                  const Classification c = classify_family(fam);
                  pool.add(fam.algebra, c);
                  const Mat id = Mat::identity(f, 4);
                  v.require(c.involutions.size() == 1 && c.involutions.front() == id,
                            "involution search returns " + std::to_string(c.involutions.size()) + " maps");
                  const ThetaSolutions ts = solve_theta(fam.algebra, id, fam.lattice);
                  bool span_ok = ts.families.size() == 1 && ts.families.front().basepoint.is_zero();
                  if (span_ok) {
                      const Vec x = Vec::basis(f, 4, 1), gx = Vec::basis(f, 4, 3);
                      auto dirs = ts.families.front().directions;
                      span_ok = dirs.size() == 2 && detail::in_span(dirs, x) && detail::in_span(dirs, gx);
                      const AlgebraData& a = fam.algebra.algebra;
                      span_ok = span_ok && multiply(a, x, x).is_zero() && multiply(a, gx, gx).is_zero() &&
                                (multiply(a, x, gx) + multiply(a, gx, x)).is_zero();
                  }
                  v.require(span_ok, "theta solution set for phi = id");
                  const bool all_trivial = std::all_of(c.structures.begin(), c.structures.end(),
                                                       [](const ClassifiedStructure& s) { return s.ext.phi.is_identity(); });
                  v.note(detail::count_text(c.involutions.size(), "involutions") + ", " +
                         detail::count_text(c.structures.size(), "structure families") +
                         (all_trivial ? ", every extension phi-trivial" : ", a non-trivial phi extends"));
              });

    const CycField f24 = field_make(24);
    std::vector<std::pair<std::string, ExtFrobAlgebra>> reps;

    criterion(11, "tensor and biproduct over all catalog pairs pass check_extended", 60000, [&](detail::Verdict& v) {
        reps = detail::catalog_representatives(f24);
        std::size_t pairs = 0, max_dim = 0;
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i; j < reps.size(); ++j) {
                ++pairs;
                const ExtFrobAlgebra t = tensor_product_ext(reps[i].second, reps[j].second);
                const ExtFrobAlgebra p = biproduct_ext(reps[i].second, reps[j].second);
                max_dim = std::max(max_dim, t.dim());
                pool.add(t);
                pool.add(p);
                v.require(check_extended(t).passed(), reps[i].first + " x " + reps[j].first);
                v.require(check_extended(p).passed(), reps[i].first + " + " + reps[j].first);
            }
        v.require(pairs >= 25 && max_dim <= 16, "pair count or dimension");
        v.note(std::to_string(pairs) + " pairs, largest dimension " + std::to_string(max_dim));
    });

    criterion(12, "separable (I, u) on k, rescaled Mat2, Mat3; (id, +-sqrt(n) I_n) for n <= 3", 10000,
              [&](detail::Verdict& v) {
                  std::vector<FrobAlgebra> seps{unit_frobenius(f24)};
                  for (std::size_t n : {2u, 3u})
                      seps.push_back(rescale_comultiplication(matrix_frobenius(n, f24),
                                                              CycScalar(f24, Rational(1, static_cast<long>(n)))));
                  for (const auto& fa : seps) {
                      const ExtFrobAlgebra e{fa, separable_extension(fa)};
                      pool.add(e);
                      v.require(check_extended(e).passed(), "separable extension of dimension " + std::to_string(fa.dim()));
                  }
                  for (std::size_t n = 1; n <= 3; ++n)
                      for (int sign : {1, -1}) {
                          const ExtFrobAlgebra e = matrix_algebra(n, f24, sign);
                          pool.add(e);
                          v.require(check_extended(e).passed(), "Mat" + std::to_string(n) + " sign " + std::to_string(sign));
                      }
              });

    criterion(13, "psi(kG) is Frobenius, equals the group algebra, and satisfies the antipode lemma", 30000,
              [&](detail::Verdict& v) {
                  const CycField f = field_make(1);
                  for (const auto& g : detail::hopf_groups()) {
                      const HopfAlgebra h = group_hopf(g, f);
                      const FrobAlgebra p = psi(h);
                      v.require(check_frobenius(p).passed(), g.name + " check_frobenius");
                      v.require(p == group_algebra(g, f), g.name + " differs from the group algebra");
                      const Report a1 = check_lemma_A1(h);
                      v.require(a1.passed(), g.name + " " + (a1.passed() ? std::string() : a1.failures().front()));
                  }
                  v.note(std::to_string(detail::hopf_groups().size()) + " groups");
              });

    criterion(14, "integral theta extension with theta = sqrt|G| u; wrong theta rejected with both sides", 10000,
              [&](detail::Verdict& v) {
                  for (const auto& g : detail::hopf_groups()) {
                      const unsigned n = static_cast<unsigned>(g.order);
                      const CycField f = field_make(sqrt_conductor(n));
                      const HopfAlgebra h = group_hopf(g, f);
                      const ThetaExtensionResult good = integral_theta_extension(h, sqrt_rational(f, n) * h.u);
                      v.require(good.matched() && check_extended(*good.extension).passed(), g.name + " sqrt|G| u");
                      if (good.matched())
                          pool.add(*good.extension);
                      const ThetaExtensionResult wrong = integral_theta_extension(h, h.u);
                      v.require(!wrong.matched() && wrong.theta_square == h.u &&
                                    wrong.unit_side == CycScalar(f, static_cast<long>(n)) * h.u,
                                g.name + " wrong theta");
                  }
              });

    criterion(15, "(kC2, id, sqrt2 e) extends the Hopf structure; (kC2, g -> -g, 0) is Frobenius-only", 5000,
              [&](detail::Verdict& v) {
                  const CycField f = field_make(8);
                  const HopfAlgebra h = group_hopf(cyclic_group(2), f);
                  const ExtFrobAlgebra plus = detail::c2_sqrt2(f), flip = detail::c2_negation(f);
                  v.require(check_extended_hopf(h, plus.ext.phi, plus.ext.theta).passed(), "(id, sqrt2 e) as Hopf");
                  const Report r = check_extended_hopf(h, flip.ext.phi, flip.ext.theta);
                  v.require(!r.passed(), "(g -> -g, 0) should fail as Hopf");
                  const ExtFrobAlgebra via_psi{psi(h), flip.ext};
                  pool.add(via_psi);
                  pool.add(ext_hopf_to_ext_frob(h, plus.ext.phi, plus.ext.theta));
                  v.require(check_extended(via_psi).passed(), "(g -> -g, 0) as Frobenius");
                  if (!r.passed())
                      v.note("Hopf check fails at " + r.failures().front());
              });

    const CycField f8 = field_make(8);
    const ObjectSample s123 = make_sample(f8, {1, 2, 3}, 5, 1);
    const ObjectSample s12 = make_sample(f8, {1, 2}, 5, 1);

    criterion(16, "tensor and biproduct functors are extended Frobenius; tensor with kC2 is not separable", 60000,
              [&](detail::Verdict& v) {
                  for (const auto& b : {detail::c2_sqrt2(f8), detail::c2_negation(f8)})
                      for (FunctorKind k : {FunctorKind::tensor, FunctorKind::biproduct}) {
                          const RealizedFunctor F = realize_functor(k, b);
                          const Report r = check_extended_functor(F, s123);
                          v.require(r.passed(), F.name() + (r.passed() ? "" : " " + r.failures().front()));
                      }
                  const FrobAlgebra kc2 = group_algebra(cyclic_group(2), f8);
                  const RealizedFunctor plain = tensor_with({kc2, {Mat::identity(f8, 2), kc2.u()}});
                  v.require(!check_separable_functor(plain, s123), "tensor with kC2 reported separable");
                  v.note("sample dims {1,2,3}, " + std::to_string(s123.morphisms.size()) + " morphisms, seed " +
                         std::to_string(s123.seed));
              });

    criterion(17, "apply_functor output passes and matches tensor_product_ext / biproduct_ext", 30000,
              [&](detail::Verdict& v) {
                  const std::vector<ExtFrobAlgebra> bs{detail::c2_sqrt2(f8), detail::c2_negation(f8),
                                                       unit_ext_algebra(f8, -1)};
                  std::vector<ExtFrobAlgebra> as = bs;
                  for (const char* name : {"k", "CR", "kC4", "T2"}) {
                      const Family fam = catalog_family(name, 8);
                      as.push_back({fam.algebra, fam.claimed.front().ext});
                  }
                  std::size_t pairs = 0;
                  for (const auto& b : bs) {
                      const RealizedFunctor t = realize_functor(FunctorKind::tensor, b);
                      const RealizedFunctor p = realize_functor(FunctorKind::biproduct, b);
                      for (const auto& a : as) {
                          ++pairs;
                          const ExtFrobAlgebra ta = apply_functor(t, a), pa = apply_functor(p, a);
                          pool.add(ta);
                          pool.add(pa);
                          v.require(check_extended(ta).passed() && ta == tensor_product_ext(a, b), "tensor pair");
                          v.require(check_extended(pa).passed() && pa == biproduct_ext(a, b), "biproduct pair");
                      }
                  }
                  v.note(std::to_string(pairs) + " pairs per functor kind");
              });

    criterion(18, "compose_functors over 4 pairs passes check_extended_functor on dims {1,2}", 60000,
              [&](detail::Verdict& v) {
                  const RealizedFunctor t1 = realize_functor(FunctorKind::tensor, detail::c2_sqrt2(f8), "B");
                  const RealizedFunctor t2 = realize_functor(FunctorKind::tensor, detail::c2_negation(f8), "B'");
                  const RealizedFunctor p1 = realize_functor(FunctorKind::biproduct, detail::c2_sqrt2(f8), "B");
                  const RealizedFunctor p2 = realize_functor(FunctorKind::biproduct, detail::c2_negation(f8), "B'");
                  for (const auto& [g, fn] : {std::pair{t1, t2}, std::pair{p1, t2}, std::pair{t2, p1}, std::pair{p1, p2}}) {
                      const RealizedFunctor c = compose_functors(g, fn, s12);
                      const Report r = check_extended_functor(c, s12);
                      v.require(r.passed(), c.name() + (r.passed() ? "" : " " + r.failures().front()));
                      pool.add(apply_functor(c, detail::c2_sqrt2(f8)));
                  }
              });

    criterion(9, "key identity m(phi x I) Delta = m(theta^2 x I) on every structure of the run (>= 40)", 5000,
              [&](detail::Verdict& v) {
                  std::size_t bad = 0;
                  for (const auto& e : pool.items)
                      bad += check_key_identity(e) ? 0 : 1;
                  v.require(pool.items.size() >= 40, "only " + std::to_string(pool.items.size()) + " structures");
                  v.require(bad == 0, std::to_string(bad) + " structures violate the identity");
                  v.note(std::to_string(pool.items.size()) + " structures");
              });

    criterion(10, "every passing extended morphism of the run is invertible", 0, [&](detail::Verdict& v) {
        const MorphismAudit a = morphism_audit();
        v.require(a.passed > 0, "no morphisms were checked");
        v.require(a.singular == 0, std::to_string(a.singular) + " singular morphisms");
        v.note(std::to_string(a.passed) + " passing morphisms, " + std::to_string(a.singular) + " singular");
    });

    criterion(
        19, "phi-search on kC5 and kC6 returns only the conjectured shapes", 0,
        [&](detail::Verdict& v) {
            for (std::size_t n : {5u, 6u}) {
                const Family fam = catalog_family("kC" + std::to_string(n));
                const auto inv = find_frobenius_involutions(fam.algebra, fam.lattice);
                std::size_t off = 0;
                for (const auto& phi : inv)
                    off += detail::conjectured_shape(phi, n) ? 0 : 1;
                v.require(off == 0, "kC" + std::to_string(n) + ": " + std::to_string(off) + " maps of another shape");
                v.note("kC" + std::to_string(n) + ": " + std::to_string(inv.size()) + " involutions, " +
                       std::to_string(inv.size() - off) + " of the conjectured shapes");
            }
        },
        true);

    std::sort(run.results.begin(), run.results.end(),
              [](const CriterionResult& a, const CriterionResult& b) { return a.number < b.number; });
    if (out)
        for (const auto& r : run.results)
            *out << format_criterion(r) << "\n";
    return run;
}

} // namespace frobex

#endif // FROBEX_ACCEPTANCE_HPP
