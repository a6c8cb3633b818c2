#pragma once

#include <optional>
#include <vector>

#include "twyang/error.hpp"
#include "twyang/matrix.hpp"
#include "twyang/rational.hpp"

namespace twyang {

template <class T>
struct Rref {
    Matrix<T> reduced;  // reduced row echelon form, pivots equal to one
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination; pivots chosen leftmost column first, topmost nonzero row.
template <class T>
Rref<T> rref(Matrix<T> a) {
    Rref<T> out;
    std::size_t r = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        T inv = T(1) / a(r, c);
        T* prow = a.row(r);
        for (std::size_t j = c; j < cols; ++j) prow[j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            T f = a(i, c);
            T* irow = a.row(i);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(prow[j])) irow[j] -= f * prow[j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

/// Basis of {x : a x = 0} as the columns of the returned matrix.
template <class T>
Matrix<T> nullspace_from_rref(const Rref<T>& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix<T> basis(cols, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = T(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = T(0) - e.reduced(i, free[k]);
    }
    return basis;
}

/// Pivot columns via fraction-free (Bareiss) elimination on the integer-scaled matrix.
std::vector<std::size_t> bareiss_pivots(const Matrix<Rational>& a);

template <class T>
std::vector<std::size_t> pivot_columns(const Matrix<T>& a) {
    return rref(a).pivots;
}
template <>
inline std::vector<std::size_t> pivot_columns(const Matrix<Rational>& a) {
    return bareiss_pivots(a);
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
    return pivot_columns(a).size();
}

template <class T>
Matrix<T> nullspace(const Matrix<T>& a) {
    return nullspace_from_rref(rref(a), a.cols());
}

/// Kernel over Q computed from the Bareiss echelon form.
Matrix<Rational> bareiss_nullspace(const Matrix<Rational>& a);
template <>
inline Matrix<Rational> nullspace(const Matrix<Rational>& a) {
    return bareiss_nullspace(a);
}

/// Columns of a at its pivot columns: a basis of the column space.
template <class T>
Matrix<T> column_space_basis(const Matrix<T>& a) {
    auto piv = pivot_columns(a);
    Matrix<T> b(a.rows(), piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) b(i, k) = a(i, piv[k]);
    return b;
}

/// Solves a x = b for square invertible a; throws SingularParameter if a is singular.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (!a.square() || a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve");
    const std::size_t n = a.rows(), m = b.cols();
    Matrix<T> aug(n, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = b(i, j);
    }
    auto e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorKind::SingularParameter, "singular system");
    Matrix<T> x(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) x(i, j) = e.reduced(i, n + j);
    return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    return solve(a, Matrix<T>::identity(a.rows()));
}

template <class T>
T determinant(Matrix<T> a) {
    if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = T(0) - det;
        }
        det *= a(c, c);
        T inv = T(1) / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            T f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

/// Incrementally maintained reduced row basis; used for large homogeneous systems where
/// rows arrive in batches and elimination can stop once a target rank is reached.
template <class T>
class RowBasis {
   public:
    explicit RowBasis(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    /// Reduces v against the basis and inserts it if independent; returns true on insertion.
    bool add(std::vector<T> v) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_zero(v[c])) continue;
            std::size_t r = pivot_row_[c];
            if (r == npos) {
                T inv = T(1) / v[c];
                for (std::size_t j = c; j < cols_; ++j) v[j] *= inv;
                pivot_row_[c] = rows_.size();
                rows_.push_back(std::move(v));
                return true;
            }
            T f = v[c];
            const std::vector<T>& pr = rows_[r];
            for (std::size_t j = c; j < cols_; ++j)
                if (!is_zero(pr[j])) v[j] -= f * pr[j];
        }
        return false;
    }

    /// Kernel of the accumulated rows, as matrix columns.
    Matrix<T> kernel() const {
        Matrix<T> m(rows_.size(), cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = rows_[i][j];
        return nullspace_from_rref(rref(std::move(m)), cols_);
    }

   private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t cols_;
    std::vector<std::size_t> pivot_row_;
    std::vector<std::vector<T>> rows_;
};

}  // namespace twyang
