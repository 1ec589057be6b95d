#ifndef FROBEX_LINALG_HPP
#define FROBEX_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobex/error.hpp"
#include "frobex/scalars.hpp"

namespace frobex {

/// Column vector over a cyclotomic field.
class Vec {
public:
    Vec() = default;
    Vec(CycField f, std::size_t n) : field_(f), entries_(n, CycScalar(f)) {}
    Vec(CycField f, std::vector<CycScalar> entries) : field_(f), entries_(std::move(entries))
    {
        for (const auto& e : entries_)
            require_same_field(field_, e.field());
    }

    /// Standard basis vector e_i.
    static Vec basis(CycField f, std::size_t n, std::size_t i)
    {
        Vec v(f, n);
        v.entries_.at(i) = CycScalar(f, 1L);
        return v;
    }

    CycField field() const { return field_; }
    std::size_t size() const { return entries_.size(); }
    const CycScalar& operator[](std::size_t i) const { return entries_[i]; }
    CycScalar& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<CycScalar>& entries() const { return entries_; }

    bool is_zero() const
    {
        return std::all_of(entries_.begin(), entries_.end(), [](const CycScalar& s) { return s.is_zero(); });
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.field_ == b.field_ && a.entries_ == b.entries_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    friend Vec operator+(const Vec& a, const Vec& b)
    {
        check_compatible(a, b);
        Vec r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r.entries_[i] += b.entries_[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b)
    {
        check_compatible(a, b);
        Vec r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r.entries_[i] -= b.entries_[i];
        return r;
    }
    friend Vec operator*(const CycScalar& s, const Vec& a)
    {
        Vec r = a;
        for (auto& e : r.entries_)
            e = s * e;
        return r;
    }
    Vec operator-() const
    {
        Vec r = *this;
        for (auto& e : r.entries_)
            e = -e;
        return r;
    }

    /// Lexicographic by entries under the scalar order.
    friend int compare(const Vec& a, const Vec& b)
    {
        const std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i)
            if (int c = compare(a.entries_[i], b.entries_[i]))
                return c;
        return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
    }

private:
    static void check_compatible(const Vec& a, const Vec& b)
    {
        require_same_field(a.field_, b.field_);
        if (a.size() != b.size())
            throw ShapeMismatch("vector length " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }

    CycField field_;
    std::vector<CycScalar> entries_;
};

/// Matrix over a cyclotomic field. Entries are addressed densely (row-major); only nonzero
/// entries are stored, row by row in increasing column order.
class Mat {
public:
    using Entry = std::pair<std::size_t, CycScalar>;
    using Row = std::vector<Entry>;

    Mat() = default;
    Mat(CycField f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows) {}

    static Mat identity(CycField f, std::size_t n)
    {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.data_[i].emplace_back(i, CycScalar(f, 1L));
        return m;
    }

    static Mat from_rows(CycField f, const std::vector<std::vector<CycScalar>>& rows)
    {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Mat m(f, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c)
                throw ShapeMismatch("ragged row " + std::to_string(i));
            for (std::size_t j = 0; j < c; ++j)
                m.set(i, j, rows[i][j]);
        }
        return m;
    }

    /// n x 1 matrix holding v.
    static Mat column(const Vec& v)
    {
        Mat m(v.field(), v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero())
                m.data_[i].emplace_back(0, v[i]);
        return m;
    }

    /// 1 x n matrix holding v.
    static Mat row(const Vec& v)
    {
        Mat m(v.field(), 1, v.size());
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero())
                m.data_[0].emplace_back(j, v[j]);
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length rows).
    static Mat from_columns(CycField f, std::size_t rows, const std::vector<Vec>& cols)
    {
        Mat m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw ShapeMismatch("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                if (!cols[j][i].is_zero())
                    m.data_[i].emplace_back(j, cols[j][i]);
        }
        return m;
    }

    CycField field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Row& row_entries(std::size_t i) const { return data_[i]; }

    std::size_t nnz() const
    {
        std::size_t n = 0;
        for (const auto& r : data_)
            n += r.size();
        return n;
    }

    CycScalar at(std::size_t i, std::size_t j) const
    {
        check_index(i, j);
        const Row& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
        if (it != r.end() && it->first == j)
            return it->second;
        return CycScalar(field_);
    }

    void set(std::size_t i, std::size_t j, const CycScalar& v)
    {
        check_index(i, j);
        require_same_field(field_, v.field());
        Row& r = data_[i];
        auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
        const bool present = it != r.end() && it->first == j;
        if (v.is_zero()) {
            if (present)
                r.erase(it);
        } else if (present) {
            it->second = v;
        } else {
            r.insert(it, Entry(j, v));
        }
    }

    Vec column_vec(std::size_t j) const
    {
        Vec v(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = at(i, j);
        return v;
    }

    Vec row_vec(std::size_t i) const
    {
        Vec v(field_, cols_);
        for (const auto& [j, s] : data_.at(i))
            v[j] = s;
        return v;
    }

    /// Dense row-major copy of the entries.
    std::vector<std::vector<CycScalar>> dense() const
    {
        std::vector<std::vector<CycScalar>> out(rows_, std::vector<CycScalar>(cols_, CycScalar(field_)));
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [j, s] : data_[i])
                out[i][j] = s;
        return out;
    }

    Mat transpose() const
    {
        Mat t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [j, s] : data_[i])
                t.data_[j].emplace_back(i, s);
        return t;
    }

    bool is_zero() const { return nnz() == 0; }

    bool is_identity() const
    {
        if (rows_ != cols_)
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            if (data_[i].size() != 1 || data_[i][0].first != i || !data_[i][0].second.is_one())
                return false;
        return true;
    }

    /// First (row, col) where the two matrices differ.
    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Mat& o) const
    {
        check_same_shape(*this, o);
        for (std::size_t i = 0; i < rows_; ++i) {
            const Row& a = data_[i];
            const Row& b = o.data_[i];
            if (a == b)
                continue;
            std::size_t ia = 0, ib = 0;
            while (ia < a.size() || ib < b.size()) {
                const std::size_t ca = ia < a.size() ? a[ia].first : cols_;
                const std::size_t cb = ib < b.size() ? b[ib].first : cols_;
                if (ca == cb) {
                    if (a[ia].second != b[ib].second)
                        return std::make_pair(i, ca);
                    ++ia;
                    ++ib;
                } else {
                    return std::make_pair(i, std::min(ca, cb));
                }
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const Mat& a, const Mat& b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator+(const Mat& a, const Mat& b) { return combine(a, b, false); }
    friend Mat operator-(const Mat& a, const Mat& b) { return combine(a, b, true); }

    friend Mat operator*(const CycScalar& s, const Mat& a)
    {
        require_same_field(s.field(), a.field_);
        Mat r(a.field_, a.rows_, a.cols_);
        if (s.is_zero())
            return r;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            r.data_[i].reserve(a.data_[i].size());
            for (const auto& [j, v] : a.data_[i])
                r.data_[i].emplace_back(j, s * v);
        }
        return r;
    }

    Mat operator-() const { return CycScalar(field_, -1L) * *this; }

    friend Mat operator*(const Mat& a, const Mat& b)
    {
        require_same_field(a.field_, b.field_);
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("mat_mul: " + a.shape() + " * " + b.shape());
        Mat r(a.field_, a.rows_, b.cols_);
        std::vector<CycScalar> acc(b.cols_, CycScalar(a.field_));
        std::vector<char> touched(b.cols_, 0);
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            cols.clear();
            for (const auto& [k, av] : a.data_[i]) {
                for (const auto& [j, bv] : b.data_[k]) {
                    if (!touched[j]) {
                        touched[j] = 1;
                        cols.push_back(j);
                        acc[j] = av * bv;
                    } else {
                        acc[j] += av * bv;
                    }
                }
            }
            std::sort(cols.begin(), cols.end());
            for (std::size_t j : cols) {
                if (!acc[j].is_zero())
                    r.data_[i].emplace_back(j, std::move(acc[j]));
                acc[j] = CycScalar(a.field_);
                touched[j] = 0;
            }
        }
        return r;
    }

    friend Vec operator*(const Mat& a, const Vec& v)
    {
        require_same_field(a.field_, v.field());
        if (a.cols_ != v.size())
            throw ShapeMismatch("mat_vec: " + a.shape() + " * vector of length " + std::to_string(v.size()));
        Vec r(a.field_, a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            CycScalar s(a.field_);
            for (const auto& [k, av] : a.data_[i])
                if (!v[k].is_zero())
                    s += av * v[k];
            r[i] = s;
        }
        return r;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    /// Lexicographic by dense row-major entries under the scalar order.
    friend int compare(const Mat& a, const Mat& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return a.rows_ * a.cols_ < b.rows_ * b.cols_ ? -1 : 1;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            if (a.data_[i] == b.data_[i])
                continue;
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (int c = compare(a.at(i, j), b.at(i, j)))
                    return c;
        }
        return 0;
    }

private:
    void check_index(std::size_t i, std::size_t j) const
    {
        if (i >= rows_ || j >= cols_)
            throw ShapeMismatch("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape());
    }

    static void check_same_shape(const Mat& a, const Mat& b)
    {
        require_same_field(a.field_, b.field_);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("shape " + a.shape() + " vs " + b.shape());
    }

    static Mat combine(const Mat& a, const Mat& b, bool subtract)
    {
        check_same_shape(a, b);
        Mat r(a.field_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            const Row& x = a.data_[i];
            const Row& y = b.data_[i];
            Row& out = r.data_[i];
            std::size_t ix = 0, iy = 0;
            while (ix < x.size() || iy < y.size()) {
                const std::size_t cx = ix < x.size() ? x[ix].first : a.cols_;
                const std::size_t cy = iy < y.size() ? y[iy].first : a.cols_;
                if (cx < cy) {
                    out.push_back(x[ix++]);
                } else if (cy < cx) {
                    out.emplace_back(cy, subtract ? -y[iy].second : y[iy].second);
                    ++iy;
                } else {
                    CycScalar s = subtract ? x[ix].second - y[iy].second : x[ix].second + y[iy].second;
                    if (!s.is_zero())
                        out.emplace_back(cx, std::move(s));
                    ++ix;
                    ++iy;
                }
            }
        }
        return r;
    }

    CycField field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

inline Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

/// Kronecker product; basis pair (i, j) maps to index i * dim_B + j.
inline Mat kron(const Mat& a, const Mat& b)
{
    require_same_field(a.field(), b.field());
    Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.row_entries(i).empty())
            continue;
        for (std::size_t k = 0; k < b.rows(); ++k) {
            const std::size_t row = i * b.rows() + k;
            for (const auto& [j, av] : a.row_entries(i))
                for (const auto& [l, bv] : b.row_entries(k))
                    r.set(row, j * b.cols() + l, av * bv);
        }
    }
    return r;
}

inline Vec kron(const Vec& a, const Vec& b)
{
    require_same_field(a.field(), b.field());
    Vec r(a.field(), a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

/// Block-diagonal sum diag(a, b).
inline Mat direct_sum(const Mat& a, const Mat& b)
{
    require_same_field(a.field(), b.field());
    Mat r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row_entries(i))
            r.set(i, j, v);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.row_entries(i))
            r.set(a.rows() + i, a.cols() + j, v);
    return r;
}

inline Vec direct_sum(const Vec& a, const Vec& b)
{
    require_same_field(a.field(), b.field());
    std::vector<CycScalar> e = a.entries();
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    return Vec(a.field(), std::move(e));
}

/// The symmetry c: e_i (x) e_j -> e_j (x) e_i of k^d1 (x) k^d2.
inline Mat swap_map(std::size_t d1, std::size_t d2, CycField f)
{
    Mat s(f, d1 * d2, d1 * d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            s.set(j * d1 + i, i * d2 + j, CycScalar(f, 1L));
    return s;
}

struct LinearSolution {
    Vec solution;
    std::vector<Vec> nullspace;
};

namespace detail {

struct Rref {
    std::vector<std::vector<CycScalar>> rows; // reduced rows, pivot rows first
    std::vector<std::size_t> pivots;          // pivot column of each nonzero row
};

/// Reduced row echelon form; pivots chosen as the first nonzero entry in each column.
inline Rref rref(std::vector<std::vector<CycScalar>> m, std::size_t ncols)
{
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[r], m[p]);
        const CycScalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < m[r].size(); ++j)
            if (!m[r][j].is_zero())
                m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            const CycScalar factor = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j)
                if (!m[r][j].is_zero())
                    m[i][j] = m[i][j] - factor * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

} // namespace detail

/// Solve a x = b exactly. Returns the solution with free variables set to zero and a nullspace
/// basis (one vector per free variable), or nullopt when the system is inconsistent.
inline std::optional<LinearSolution> solve_linear(const Mat& a, const Vec& b)
{
    require_same_field(a.field(), b.field());
    if (a.rows() != b.size())
        throw ShapeMismatch("solve_linear: " + a.shape() + " with right-hand side of length " +
                            std::to_string(b.size()));
    const CycField f = a.field();
    const std::size_t n = a.cols();
    auto dense = a.dense();
    for (std::size_t i = 0; i < dense.size(); ++i)
        dense[i].push_back(b[i]);
    detail::Rref rr = detail::rref(std::move(dense), n);
    for (std::size_t i = rr.pivots.size(); i < rr.rows.size(); ++i)
        if (!rr.rows[i][n].is_zero())
            return std::nullopt;
    LinearSolution out{Vec(f, n), {}};
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        out.solution[rr.pivots[i]] = rr.rows[i][n];
    std::vector<char> is_pivot(n, 0);
    for (std::size_t p : rr.pivots)
        is_pivot[p] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        Vec v(f, n);
        v[c] = CycScalar(f, 1L);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            if (!rr.rows[i][c].is_zero())
                v[rr.pivots[i]] = -rr.rows[i][c];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

inline std::size_t rank(const Mat& a)
{
    return detail::rref(a.dense(), a.cols()).pivots.size();
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Mat> inverse(const Mat& a)
{
    if (a.rows() != a.cols())
        throw ShapeMismatch("inverse of non-square " + a.shape());
    const std::size_t n = a.rows();
    const CycField f = a.field();
    auto dense = a.dense();
    for (std::size_t i = 0; i < n; ++i) {
        dense[i].resize(2 * n, CycScalar(f));
        dense[i][n + i] = CycScalar(f, 1L);
    }
    detail::Rref rr = detail::rref(std::move(dense), n);
    if (rr.pivots.size() != n)
        return std::nullopt;
    Mat inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.set(i, j, rr.rows[i][n + j]);
    return inv;
}

inline CycScalar trace(const Mat& a)
{
    if (a.rows() != a.cols())
        throw ShapeMismatch("trace of non-square " + a.shape());
    CycScalar t(a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        t += a.at(i, i);
    return t;
}

} // namespace frobex

#endif // FROBEX_LINALG_HPP
