#pragma once

#include <algorithm>
#include <vector>

#include "twyang/error.hpp"
#include "twyang/matrix.hpp"
#include "twyang/series.hpp"
#include "twyang/tensor.hpp"

namespace twyang {

/// Truncated Laurent series with matrix coefficients: sum_{k=start}^{prec-1} M_k t^k + O(t^prec).
template <class T>
class MatSeries {
   public:
    MatSeries() = default;
    MatSeries(std::size_t rows, std::size_t cols, int start, int prec) : rows_(rows), cols_(cols), start_(start) {
        c_.assign(static_cast<std::size_t>(std::max(prec - start, 0)), Matrix<T>(rows, cols));
    }
    static MatSeries constant(Matrix<T> m, int prec) {
        MatSeries s(m.rows(), m.cols(), 0, prec);
        if (!s.c_.empty()) s.c_[0] = std::move(m);
        return s;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    int start() const noexcept { return start_; }
    int prec() const noexcept { return start_ + static_cast<int>(c_.size()); }

    /// Coefficient of t^k for start <= k < prec.
    Matrix<T>& at(int k) { return c_.at(static_cast<std::size_t>(k - start_)); }
    const Matrix<T>& at(int k) const { return c_.at(static_cast<std::size_t>(k - start_)); }
    /// Coefficient of t^k, zero below start.
    Matrix<T> coeff(int k) const {
        if (k < start_) return Matrix<T>(rows_, cols_);
        if (k >= prec()) throw Error(ErrorKind::IndexOutOfRange, "coefficient beyond the series precision");
        return at(k);
    }

    /// First exponent with a nonzero coefficient, or prec() if all known ones vanish.
    int order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return start_ + static_cast<int>(i);
        return prec();
    }

    template <class F>
    MatSeries apply_each(F&& f) const {
        MatSeries r;
        r.start_ = start_;
        for (const auto& m : c_) r.c_.push_back(f(m));
        if (!r.c_.empty()) {
            r.rows_ = r.c_[0].rows();
            r.cols_ = r.c_[0].cols();
        }
        return r;
    }

    template <class U>
    MatSeries<U> convert() const {
        MatSeries<U> r(rows_, cols_, start_, prec());
        for (int k = start_; k < prec(); ++k) r.at(k) = at(k).template map<U>([](const T& x) { return U(x); });
        return r;
    }

    /// Drops coefficients at and above `prec`.
    void truncate(int prec) {
        if (prec < this->prec()) c_.resize(static_cast<std::size_t>(std::max(prec - start_, 0)));
    }

    friend MatSeries operator*(const MatSeries& a, const MatSeries& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "series product");
        int s = a.start_ + b.start_;
        int p = std::min(a.prec() + b.start_, b.prec() + a.start_);
        MatSeries r(a.rows_, b.cols_, s, p);
        for (int i = a.start_; i < a.prec(); ++i)
            for (int j = b.start_; j < b.prec() && i + j < p; ++j) r.at(i + j) += a.at(i) * b.at(j);
        return r;
    }

   private:
    std::size_t rows_ = 0, cols_ = 0;
    int start_ = 0;
    std::vector<Matrix<T>> c_;
};

/// M <- (1 + f(t) X) M with X acting on the selected legs.
template <class T>
void left_mul_elementary(MatSeries<T>& m, const Matrix<T>& x, const LegSelection& sel, const Series<T>& f) {
    if (f.prec() < 1) throw Error(ErrorKind::IndexOutOfRange, "elementary factor needs precision >= 1");
    const int sf = std::min(0, f.start());
    const int s = m.start() + sf;
    const int p = std::min(m.prec() + sf, f.prec() + m.start());
    std::vector<Matrix<T>> xm;
    xm.reserve(static_cast<std::size_t>(std::max(m.prec() - m.start(), 0)));
    for (int k = m.start(); k < m.prec(); ++k) {
        Matrix<T> out(m.rows(), m.cols());
        apply_on_legs_acc(x, sel, m.at(k), out);
        xm.push_back(std::move(out));
    }
    MatSeries<T> r(m.rows(), m.cols(), s, p);
    for (int k = s; k < p; ++k) {
        Matrix<T>& dst = r.at(k);
        if (k >= m.start() && k < m.prec()) dst += m.at(k);
        for (int j = f.start(); j < f.prec(); ++j) {
            int i = k - j;
            if (i < m.start()) break;
            if (i >= m.prec()) continue;
            const T fj = f[j];
            if (is_zero(fj)) continue;
            const auto& src = xm[static_cast<std::size_t>(i - m.start())];
            for (std::size_t row = 0; row < m.rows(); ++row) {
                T* d = dst.row(row);
                const T* sr = src.row(row);
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (!is_zero(sr[c])) d[c] += fj * sr[c];
            }
        }
    }
    m = std::move(r);
}

/// M <- A(t) M with A acting on the selected legs.
template <class T>
void left_mul_series(MatSeries<T>& m, const MatSeries<T>& a, const LegSelection& sel) {
    const int s = m.start() + a.start();
    const int p = std::min(m.prec() + a.start(), a.prec() + m.start());
    MatSeries<T> r(m.rows(), m.cols(), s, p);
    for (int i = a.start(); i < a.prec(); ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = m.start(); j < m.prec() && i + j < p; ++j) apply_on_legs_acc(a.at(i), sel, m.at(j), r.at(i + j));
    }
    m = std::move(r);
}

/// M <- (alpha(t) + beta(t) X) M with X acting on the selected legs.
template <class T>
void left_mul_affine(MatSeries<T>& m, const Series<T>& alpha, const Matrix<T>& x, const LegSelection& sel,
                     const Series<T>& beta) {
    const int sf = std::min(alpha.start(), beta.start());
    const int pf = std::min(alpha.prec(), beta.prec());
    const int s = m.start() + sf;
    const int p = std::min(m.prec() + sf, pf + m.start());
    std::vector<Matrix<T>> xm;
    for (int k = m.start(); k < m.prec(); ++k) {
        Matrix<T> out(m.rows(), m.cols());
        apply_on_legs_acc(x, sel, m.at(k), out);
        xm.push_back(std::move(out));
    }
    auto axpy = [&](Matrix<T>& dst, const T& f, const Matrix<T>& src) {
        if (is_zero(f)) return;
        for (std::size_t row = 0; row < m.rows(); ++row) {
            T* d = dst.row(row);
            const T* sr = src.row(row);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!is_zero(sr[c])) d[c] += f * sr[c];
        }
    };
    MatSeries<T> r(m.rows(), m.cols(), s, p);
    for (int k = s; k < p; ++k) {
        for (int i = m.start(); i < m.prec(); ++i) {
            int j = k - i;
            if (j >= alpha.start() && j < alpha.prec()) axpy(r.at(k), alpha[j], m.at(i));
            if (j >= beta.start() && j < beta.prec()) axpy(r.at(k), beta[j], xm[static_cast<std::size_t>(i - m.start())]);
        }
    }
    m = std::move(r);
}

/// Coefficient-wise restriction to a subspace preserved by every coefficient.
template <class T>
MatSeries<T> restrict_series(const MatSeries<T>& m, const Basis<T>& basis) {
    return m.apply_each([&](const Matrix<T>& c) { return restrict_op(c, basis, basis); });
}

}  // namespace twyang
