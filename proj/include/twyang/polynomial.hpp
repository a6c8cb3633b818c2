#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "twyang/rational.hpp"

namespace twyang {

/// Dense univariate polynomial over the rationals; coefficient i multiplies x^i.
/// The coefficient vector never carries trailing zeros, so the zero polynomial is empty.
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(int c) : Polynomial(Rational(c)) {}
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    /// x - a
    static Polynomial linear_root(const Rational& a) { return Polynomial({-a, Rational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational coeff(int i) const;
    Rational leading() const;

    Rational operator()(const Rational& a) const;
    /// p(x + a)
    Polynomial taylor_shift(const Rational& a) const;
    /// x^deg p(1/x) for deg = degree()
    Polynomial reversed(int deg) const;
    Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic gcd; gcd(0, 0) = 0.
    friend Polynomial gcd(Polynomial a, Polynomial b);

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

   private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace twyang
