#pragma once

#include <algorithm>
#include <cassert>
#include <limits>
#include <vector>

#include "twyang/error.hpp"

namespace twyang {

/// Truncated Laurent series  sum_{k=start}^{prec-1} c_k t^k + O(t^prec).
///
/// `start` is only a lower bound for the order; leading coefficients may vanish.
/// Arithmetic tracks the absolute precision `prec` exactly.
template <class T>
class Series {
   public:
    Series() = default;
    Series(int start, std::vector<T> coeffs) : start_(start), c_(std::move(coeffs)) {}

    static Series constant(const T& c, int prec) {
        if (prec <= 0) return Series(0, {});
        std::vector<T> v(static_cast<std::size_t>(prec), T(0));
        v[0] = c;
        return Series(0, std::move(v));
    }
    /// 1 / (a + b t) to absolute precision prec; requires (a, b) != (0, 0).
    static Series inverse_linear(const T& a, const T& b, int prec) {
        if (!is_zero(a)) {
            int n = std::max(prec, 0);
            std::vector<T> v(static_cast<std::size_t>(n), T(0));
            T ratio = T(0) - b / a;
            T term = T(1) / a;
            for (int k = 0; k < n; ++k) {
                v[k] = term;
                term = term * ratio;
            }
            return Series(0, std::move(v));
        }
        if (is_zero(b)) throw Error(ErrorKind::SingularFamily, "1/(a + b t) with a = b = 0");
        int n = std::max(prec + 1, 0);
        std::vector<T> v(static_cast<std::size_t>(n), T(0));
        if (n > 0) v[0] = T(1) / b;
        return Series(-1, std::move(v));
    }
    /// a + b t to absolute precision prec.
    static Series linear(const T& a, const T& b, int prec) {
        int n = std::max(prec, 0);
        std::vector<T> v(static_cast<std::size_t>(n), T(0));
        if (n > 0) v[0] = a;
        if (n > 1) v[1] = b;
        return Series(0, std::move(v));
    }

    int start() const noexcept { return start_; }
    int prec() const noexcept { return start_ + static_cast<int>(c_.size()); }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<T>& coefficients() const noexcept { return c_; }

    /// Coefficient of t^k; zero below start; k must be < prec().
    T operator[](int k) const {
        assert(k < prec());
        if (k < start_) return T(0);
        return c_[static_cast<std::size_t>(k - start_)];
    }

    /// First exponent with a nonzero known coefficient, or prec() if none.
    int order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return start_ + static_cast<int>(i);
        return prec();
    }

    friend Series operator+(const Series& a, const Series& b) {
        int s = std::min(a.start_, b.start_);
        int p = std::min(a.prec(), b.prec());
        std::vector<T> v(static_cast<std::size_t>(std::max(p - s, 0)), T(0));
        for (int k = s; k < p; ++k) v[k - s] = a[k] + b[k];
        return Series(s, std::move(v));
    }
    friend Series operator-(const Series& a, const Series& b) { return a + b.scaled(T(0) - T(1)); }
    friend Series operator*(const Series& a, const Series& b) {
        int s = a.start_ + b.start_;
        int p = std::min(a.prec() + b.start_, b.prec() + a.start_);
        std::vector<T> v(static_cast<std::size_t>(std::max(p - s, 0)), T(0));
        for (int i = a.start_; i < a.prec(); ++i) {
            for (int j = b.start_; j < b.prec() && i + j < p; ++j) v[i + j - s] += a[i] * b[j];
        }
        return Series(s, std::move(v));
    }
    Series scaled(const T& s) const {
        Series r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

   private:
    int start_ = 0;
    std::vector<T> c_;
};

}  // namespace twyang
