#pragma once

// Exact dense linear algebra over the rationals.
//
// Matrices are row-major. Subspaces are stored by their reduced row echelon
// basis, which makes them canonical: two subspaces are equal iff their bases
// are equal entry for entry.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace homdef {

using Vector = std::vector<Rational>;

inline bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

inline Vector& axpy(Vector& y, const Rational& a, std::span<const Rational> x) {
    if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
    if (a.is_zero()) return y;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
    return y;
}

inline Vector scaled(std::span<const Rational> x, const Rational& a) {
    Vector y(x.begin(), x.end());
    for (auto& v : y) v *= a;
    return y;
}

inline Vector operator+(Vector a, const Vector& b) { return axpy(a, Rational(1), b); }
inline Vector operator-(Vector a, const Vector& b) { return axpy(a, Rational(-1), b); }

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, Vector entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix entry count");
    }
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Stacks the given vectors as rows.
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length");
            std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
        }
        return m;
    }

    /// Places the given vectors as columns.
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols) {
        return from_rows(rows, cols).transpose();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Vector& entries() const { return data_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }
    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const { return homdef::is_zero(data_); }

    Vector operator*(std::span<const Rational> v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
        Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            Rational acc;
            for (std::size_t c = 0; c < cols_; ++c) {
                const auto& a = (*this)(r, c);
                if (!a.is_zero() && !v[c].is_zero()) acc += a * v[c];
            }
            out[r] = std::move(acc);
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const auto& bkj = b(k, j);
                    if (!bkj.is_zero()) out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const Rational& s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    Matrix power(unsigned k) const {
        if (rows_ != cols_) throw DimensionMismatch("power of non-square matrix");
        Matrix r = identity(rows_);
        for (unsigned i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Pivots are 1 and pivot columns are elementary.
inline RrefResult rref_full(Matrix m) {
    RrefResult res;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t k = c; k < cols; ++k)
            if (!m(r, k).is_zero()) m(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

inline std::pair<Matrix, std::size_t> rref(const Matrix& m) {
    auto res = rref_full(m);
    return {std::move(res.reduced), res.rank};
}

inline std::size_t rank(const Matrix& m) { return rref_full(m).rank; }

/// Linear subspace of Q^ambient_dim, canonically represented by its RREF basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
        return from_rows(Matrix::from_rows(ambient_dim, vectors));
    }

    /// Row space of m.
    static Subspace from_rows(const Matrix& m) {
        auto res = rref_full(m);
        Subspace s(m.cols());
        Matrix b(res.rank, m.cols());
        for (std::size_t r = 0; r < res.rank; ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) b(r, c) = res.reduced(r, c);
        s.basis_ = std::move(b);
        s.pivots_ = std::move(res.pivots);
        return s;
    }

    static Subspace full(std::size_t n) { return from_rows(Matrix::identity(n)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vector> basis_vectors() const {
        std::vector<Vector> out;
        for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
        return out;
    }

    /// Residue of v after eliminating the pivot coordinates of this basis.
    Vector reduce(std::span<const Rational> v) const {
        if (v.size() != ambient_) throw DimensionMismatch("subspace reduce");
        Vector out(v.begin(), v.end());
        for (std::size_t r = 0; r < dim(); ++r) {
            Rational f = out[pivots_[r]];
            if (!f.is_zero()) axpy(out, -f, basis_.row(r));
        }
        return out;
    }

    /// Coordinates of v in the basis; nullopt if v is not in the span.
    std::optional<Vector> coordinates(std::span<const Rational> v) const {
        if (!homdef::is_zero(reduce(v))) return std::nullopt;
        Vector c(dim());
        for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
        return c;
    }

    bool contains(std::span<const Rational> v) const { return homdef::is_zero(reduce(v)); }

    bool contains(const Subspace& w) const {
        if (w.ambient_ != ambient_) throw DimensionMismatch("subspace containment");
        for (std::size_t r = 0; r < w.dim(); ++r)
            if (!contains(w.basis_.row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
inline Subspace kernel_basis(const Matrix& m) {
    auto res = rref_full(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : res.pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < res.rank; ++r) v[res.pivots[r]] = -res.reduced(r, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(cols, vecs);
}

/// Some x with m x = b (free variables set to zero), or nullopt.
inline std::optional<Vector> solve_linear(const Matrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve_linear: rhs length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto res = rref_full(std::move(aug));
    if (!res.pivots.empty() && res.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < res.rank; ++r) x[res.pivots[r]] = res.reduced(r, m.cols());
    return x;
}

inline bool subspace_membership(const Subspace& s, std::span<const Rational> v) {
    return s.contains(v);
}

/// Image of the subspace s under the linear map m.
inline Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionMismatch("image: domain mismatch");
    std::vector<Vector> imgs;
    for (std::size_t r = 0; r < s.dim(); ++r) imgs.push_back(m * s.basis().row(r));
    return Subspace::span(m.rows(), imgs);
}

inline Subspace column_space(const Matrix& m) { return Subspace::from_rows(m.transpose()); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum");
    auto vs = a.basis_vectors();
    auto ws = b.basis_vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return Subspace::span(a.ambient_dim(), vs);
}

inline Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace intersection");
    const std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
    // Solve sum_i x_i a_i - sum_j y_j b_j = 0, then map x back.
    Matrix sys(n, da + db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < n; ++k) sys(k, i) = a.basis()(i, k);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t k = 0; k < n; ++k) sys(k, da + j) = -b.basis()(j, k);
    auto ker = kernel_basis(sys);
    std::vector<Vector> vecs;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vector v(n);
        for (std::size_t i = 0; i < da; ++i) axpy(v, ker.basis()(r, i), a.basis().row(i));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
}

/// Preimage {x in s : m x in t}.
inline Subspace preimage(const Matrix& m, const Subspace& s, const Subspace& t) {
    if (m.cols() != s.ambient_dim() || m.rows() != t.ambient_dim())
        throw DimensionMismatch("preimage");
    // Parametrize x = S^T y; require m S^T y to vanish modulo t.
    const std::size_t ds = s.dim();
    std::vector<Vector> cols;
    for (std::size_t r = 0; r < ds; ++r) cols.push_back(t.reduce(m * s.basis().row(r)));
    Matrix sys = Matrix::from_columns(m.rows(), cols);
    if (ds == 0) return Subspace(m.cols());
    auto ker = kernel_basis(sys);
    std::vector<Vector> vecs;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vector v(m.cols());
        for (std::size_t i = 0; i < ds; ++i) axpy(v, ker.basis()(r, i), s.basis().row(i));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vecs);
}

/// Canonical representatives of a basis of v / w. Requires w to be a
/// subspace of v. Each representative lies in v and vanishes on the pivot
/// coordinates of w's basis.
inline Subspace quotient_complement(const Subspace& v, const Subspace& w) {
    if (v.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("quotient ambient");
    if (!v.contains(w)) throw NotASubspace("quotient_complement: w is not contained in v");
    std::vector<Vector> rems;
    for (std::size_t r = 0; r < v.dim(); ++r) rems.push_back(w.reduce(v.basis().row(r)));
    auto q = Subspace::span(v.ambient_dim(), rems);
    if (q.dim() != v.dim() - w.dim())
        throw NotASubspace("quotient_complement: dimension inconsistency");
    return q;
}

} // namespace homdef
