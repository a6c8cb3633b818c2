#include <algorithm>
#include <cctype>
#include <sstream>

#include "twyang/error.hpp"
#include "twyang/modp.hpp"
#include "twyang/polynomial.hpp"
#include "twyang/ratfunc.hpp"
#include "twyang/rational.hpp"

namespace twyang {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::PoleAtPoint: return "PoleAtPoint";
        case ErrorKind::PoleAtInfinity: return "PoleAtInfinity";
        case ErrorKind::ZeroFunction: return "ZeroFunction";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::MalformedShape: return "MalformedShape";
        case ErrorKind::ShapeExceedsDimension: return "ShapeExceedsDimension";
        case ErrorKind::SharpInconsistent: return "SharpInconsistent";
        case ErrorKind::BoxCapExceeded: return "BoxCapExceeded";
        case ErrorKind::LimitSingular: return "LimitSingular";
        case ErrorKind::SlopeCollision: return "SlopeCollision";
        case ErrorKind::SingularParameter: return "SingularParameter";
        case ErrorKind::SingularFamily: return "SingularFamily";
        case ErrorKind::ExhaustedDepth: return "ExhaustedDepth";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::InvalidForm: return "InvalidForm";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::PoleAtPoint, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::PoleAtPoint, "division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_decimal_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-')
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    Rational r(1), b = base;
    while (exponent > 0) {
        if (exponent & 1) r *= b;
        b *= b;
        exponent >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// ModP

ModP ModP::inverse() const {
    if (v_ == 0) throw Error(ErrorKind::PoleAtPoint, "inverse of zero modulo p");
    return pow(kPrime - 2);
}

ModP ModP::pow(std::uint64_t e) const noexcept {
    ModP r = raw(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

namespace {

ModP reduce_mpz(const mpz_class& z) {
    mpz_class p(std::to_string(ModP::kPrime));
    mpz_class r = z % p;
    if (r < 0) r += p;
    return ModP::raw(std::stoull(r.get_str()));
}

}  // namespace

ModP ModP::from_rational(const Rational& r) {
    ModP num = reduce_mpz(r.numerator());
    ModP den = reduce_mpz(r.denominator());
    if (den.is_zero()) throw Error(ErrorKind::PoleAtPoint, "prime divides denominator of " + r.str());
    return num / den;
}

bool rational_reconstruct(ModP m, Rational& out) {
    // Extended Euclid on (p, m), stopping when the remainder drops below sqrt(p/2).
    mpz_class p(std::to_string(ModP::kPrime));
    mpz_class bound = sqrt(p / 2);
    mpz_class r0 = p, r1(std::to_string(m.value()));
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    mpq_class q(r1, t1);
    q.canonicalize();
    out = Rational(q);
    return true;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::operator()(const Rational& a) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
    return r;
}

Polynomial Polynomial::taylor_shift(const Rational& a) const {
    // Horner in the ring Q[x]: p(x + a) = (...(c_n (x+a) + c_{n-1})(x+a) + ...).
    Polynomial r;
    Polynomial step({a, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * step + Polynomial(*it);
    return r;
}

Polynomial Polynomial::reversed(int deg) const {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(deg + 1, 0)), Rational(0));
    for (int i = 0; i <= degree() && i <= deg; ++i) v[deg - i] = c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    r *= Rational(1) / leading();
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    c_ = std::move(v);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::PoleAtPoint, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
    Rational inv = Rational(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + b.degree())] * inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.c_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.sign() < 0 ? -c : c;
        bool unit = a == Rational(1);
        if (i == 0 || !unit) os << a;
        if (i > 0) os << (unit ? "" : "*") << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::PoleAtPoint, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.degree() > 0) {
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFunc::operator()(const Rational& a) const {
    Rational d = den_(a);
    if (d.is_zero()) throw Error(ErrorKind::PoleAtPoint, "denominator " + den_.str() + " vanishes at " + a.str());
    return num_(a) / d;
}

namespace {

int low_order(const Polynomial& p) {
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return static_cast<int>(i);
    return -1;
}

// First `count` coefficients of num/den as a power series, den(0) != 0.
std::vector<Rational> power_series_quotient(const Polynomial& num, const Polynomial& den, int count) {
    std::vector<Rational> out(static_cast<std::size_t>(count), Rational(0));
    Rational inv0 = Rational(1) / den.coeff(0);
    for (int k = 0; k < count; ++k) {
        Rational acc = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den.coeff(j) * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc * inv0;
    }
    return out;
}

Polynomial drop_low(const Polynomial& p, int k) {
    const auto& c = p.coefficients();
    return Polynomial(std::vector<Rational>(c.begin() + k, c.end()));
}

}  // namespace

LaurentExpansion RatFunc::laurent_at(const Rational& a, int count) const {
    if (is_zero()) throw Error(ErrorKind::ZeroFunction, "Laurent expansion of the zero function");
    Polynomial n = num_.taylor_shift(a), d = den_.taylor_shift(a);
    int on = low_order(n), od = low_order(d);
    LaurentExpansion e;
    e.order = on - od;
    e.coefficients = power_series_quotient(drop_low(n, on), drop_low(d, od), count);
    return e;
}

std::vector<Rational> RatFunc::series_at_infinity(int K) const {
    if (num_.degree() > den_.degree())
        throw Error(ErrorKind::PoleAtInfinity, "numerator degree exceeds denominator degree");
    // With y = 1/x: f = y^{dd - dn} rev(num)(y) / rev(den)(y).
    int dd = den_.degree();
    Polynomial rn = num_.reversed(dd);  // already absorbs the y^{dd - dn} shift
    Polynomial rd = den_.reversed(dd);
    return power_series_quotient(rn, rd, K + 1);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw Error(ErrorKind::PoleAtPoint, "division by the zero function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string RatFunc::str(const std::string& var) const {
    if (den_ == Polynomial(1)) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace twyang
