#include <doctest.h>

#include <random>

#include "twyang/linalg.hpp"
#include "twyang/modp.hpp"
#include "twyang/polynomial.hpp"
#include "twyang/ratfunc.hpp"
#include "twyang/rational.hpp"
#include "twyang/series.hpp"

using namespace twyang;

TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse(" -2/6 ").str() == "-1/3");
    CHECK_THROWS_AS(Rational::parse("2/-6"), Error);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(-9, 4)).str() == "-3/2");
    CHECK(Rational(5, 10).str() == "1/2");
    CHECK(Rational(4, 2).is_integer());
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("polynomial division and gcd") {
    Polynomial x = Polynomial::x();
    Polynomial a = (x - Polynomial(1)) * (x + Polynomial(2)) * (x - Polynomial(3));
    Polynomial b = (x - Polynomial(1)) * (x - Polynomial(3)) * Polynomial(Rational(5));
    auto [q, r] = divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == (x + Polynomial(2)) * Polynomial(Rational(1, 5)));
    CHECK(gcd(a, b) == (x - Polynomial(1)) * (x - Polynomial(3)));
    CHECK(a(Rational(3)) == Rational(0));
    CHECK(a.taylor_shift(Rational(1))(Rational(2)) == a(Rational(3)));
}

TEST_CASE("rational functions stay reduced") {
    RatFunc x = RatFunc::x();
    RatFunc f = (x * x - RatFunc(1)) / (x - RatFunc(1));
    CHECK(f == x + RatFunc(1));
    CHECK(f.denominator() == Polynomial(1));
    RatFunc g = RatFunc(1) / (x - RatFunc(Rational(1, 2)));
    CHECK(g(Rational(3, 2)) == Rational(1));
    CHECK_THROWS_AS(g(Rational(1, 2)), Error);
    CHECK((g - g).is_zero());
}

TEST_CASE("laurent expansion of a rational function") {
    // (1 + x) / (x^2 (1 - x)) = x^-2 + 2 x^-1 + 2 + 2 x + ...
    RatFunc x = RatFunc::x();
    RatFunc f = (RatFunc(1) + x) / (x * x * (RatFunc(1) - x));
    auto e = f.laurent_at(Rational(0), 4);
    CHECK(e.order == -2);
    CHECK(e.coefficients == std::vector<Rational>{1, 2, 2, 2});
    auto s = (x / (x - RatFunc(3))).series_at_infinity(3);
    CHECK(s == std::vector<Rational>{1, 3, 9, 27});
    CHECK_THROWS_AS((x * x).series_at_infinity(2), Error);
    CHECK_THROWS_AS(RatFunc(0).laurent_at(Rational(0), 2), Error);
}

TEST_CASE("series of 1/(a + b t) agrees with the rational-function expansion") {
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{2, 3}, {Rational(-1, 2), 5}, {0, 4}, {7, 0}}) {
        auto s = Series<Rational>::inverse_linear(a, b, 5);
        RatFunc f = RatFunc(1) / (RatFunc(a) + RatFunc(b) * RatFunc::x());
        auto e = f.laurent_at(Rational(0), 5 - s.start());
        CHECK(s.start() == e.order);
        for (int k = s.start(); k < s.prec(); ++k) CHECK(s[k] == e.coefficients[static_cast<std::size_t>(k - e.order)]);
    }
    CHECK_THROWS_AS(Series<Rational>::inverse_linear(Rational(0), Rational(0), 3), Error);
}

TEST_CASE("series products truncate at the joint precision") {
    auto a = Series<Rational>::linear(Rational(1), Rational(1), 4);        // 1 + t
    auto b = Series<Rational>::inverse_linear(Rational(1), Rational(1), 4);  // 1 - t + t^2 - ...
    auto c = a * b;
    CHECK(c[0] == Rational(1));
    for (int k = 1; k < c.prec(); ++k) CHECK(c[k] == Rational(0));
}

TEST_CASE("ModP arithmetic and rational reconstruction") {
    ModP a(Rational(2, 3));
    CHECK(a * ModP(3) == ModP(2));
    CHECK(a.inverse() * a == ModP(1));
    CHECK(ModP(-1) + ModP(1) == ModP(0));
    Rational back;
    REQUIRE(rational_reconstruct(ModP(Rational(-22, 7)), back));
    CHECK(back == Rational(-22, 7));
    CHECK_THROWS_AS(ModP(0).inverse(), Error);
}

namespace {

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int rank_cap) {
    // Product of r × k and k × c factors has rank at most k.
    Matrix<Rational> a(r, static_cast<std::size_t>(rank_cap)), b(static_cast<std::size_t>(rank_cap), c);
    for (std::size_t i = 0; i < r; ++i)
        for (int j = 0; j < rank_cap; ++j) a(i, j) = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
    for (int i = 0; i < rank_cap; ++i)
        for (std::size_t j = 0; j < c; ++j) b(i, j) = Rational(static_cast<long>(rng() % 11) - 5);
    return a * b;
}

}  // namespace

TEST_CASE("fraction-free rank and nullspace agree with elimination modulo p") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(rng, 6, 7, 1 + t % 5);
        auto mp = m.map<ModP>([](const Rational& x) { return ModP(x); });
        CHECK(rank(m) == rref(mp).rank());
        auto ker = nullspace(m);
        CHECK(ker.cols() == 7 - rank(m));
        CHECK((m * ker).is_zero());
    }
}

TEST_CASE("inverse, determinant and solve") {
    Matrix<Rational> a(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 4});
    CHECK(determinant(a) == Rational(18));
    CHECK(a * inverse(a) == Matrix<Rational>::identity(3));
    Matrix<Rational> b(3, 1, {1, 2, 3});
    CHECK(a * solve(a, b) == b);
    Matrix<Rational> s(2, 2, {1, 2, 2, 4});
    CHECK(determinant(s) == Rational(0));
    CHECK_THROWS_AS(inverse(s), Error);
}

TEST_CASE("row basis insertion reports independence") {
    RowBasis<Rational> rb(3);
    CHECK(rb.add({1, 2, 3}));
    CHECK(rb.add({0, 1, 1}));
    CHECK_FALSE(rb.add({2, 5, 7}));
    CHECK(rb.rank() == 2);
}
