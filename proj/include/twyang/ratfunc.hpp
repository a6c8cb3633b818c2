#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "twyang/polynomial.hpp"
#include "twyang/rational.hpp"

namespace twyang {

struct LaurentExpansion {
    int order = 0;
    std::vector<Rational> coefficients;
};

/// Univariate rational function num/den over Q, kept reduced with a monic denominator
/// after every operation so that equality is structural.
class RatFunc {
   public:
    RatFunc() : den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(Polynomial p) : num_(std::move(p)), den_(1) {}
    RatFunc(Polynomial num, Polynomial den);

    static RatFunc x() { return RatFunc(Polynomial::x()); }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Throws PoleAtPoint when the reduced denominator vanishes at a.
    Rational operator()(const Rational& a) const;

    /// Minimal exponent of (x - a) and the first `count` coefficients; throws ZeroFunction for f = 0.
    LaurentExpansion laurent_at(const Rational& a, int count) const;

    /// Coefficients of x^0, x^-1, ..., x^-K; throws PoleAtInfinity if deg num > deg den.
    std::vector<Rational> series_at_infinity(int K) const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

   private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

inline bool is_zero(const RatFunc& f) noexcept { return f.is_zero(); }

}  // namespace twyang
