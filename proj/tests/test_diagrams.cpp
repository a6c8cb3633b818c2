#include <doctest.h>

#include <set>

#include "twyang/diagrams.hpp"
#include "twyang/error.hpp"
#include "twyang/linalg.hpp"
#include "twyang/matrix.hpp"
#include "twyang/rational.hpp"

using namespace twyang;

namespace {

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
    return r;
}

// Jacobi–Trudi: s_{λ/μ}(1^N) = det[h_{λ_i - μ_j - i + j}] with h_k(1^N) = C(N + k - 1, k).
Rational jacobi_trudi(const SkewDiagram& w, int N) {
    const std::size_t r = w.rows();
    if (r == 0) return Rational(1);
    Matrix<Rational> m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const long k = w.lambda()[i] - w.mu_at(j) - static_cast<long>(i) + static_cast<long>(j);
            m(i, j) = k < 0 ? Rational(0) : binomial(N + k - 1, k);
        }
    return determinant(m);
}

std::vector<SkewDiagram> all_up_to(int max_boxes) {
    std::vector<SkewDiagram> out;
    for (int b = 1; b <= max_boxes; ++b)
        for (auto& d : enumerate_skew(b, b, b)) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("diagram parsing and canonical form") {
    auto w = SkewDiagram::parse("6,5,3,1/3,2");
    CHECK(w.lambda() == std::vector<int>{6, 5, 3, 1});
    CHECK(w.mu() == std::vector<int>{3, 2});
    CHECK(w.size() == 10);
    CHECK(w.str() == "6,5,3,1/3,2");
    CHECK(SkewDiagram::parse("1").size() == 1);
    CHECK(SkewDiagram::parse("0").empty());
    CHECK(SkewDiagram::parse("2,1,0/1,0") == SkewDiagram({2, 1}, {1}));
    CHECK_THROWS_AS(SkewDiagram::parse("2,3/0"), Error);
    CHECK_THROWS_AS(SkewDiagram::parse("2,1/3"), Error);
    CHECK_THROWS_AS(SkewDiagram::parse("2,x"), Error);
    CHECK_THROWS_AS(SkewDiagram({1}, {2}), Error);
    // Rows are not shifted: a translated copy is a different diagram with different contents.
    CHECK_FALSE(SkewDiagram({2, 2}, {1, 1}) == SkewDiagram({1, 1}));
}

TEST_CASE("column tableau fills columns top to bottom, left to right") {
    auto t = column_tableau(SkewDiagram({6, 5, 3, 1}, {3, 2}));
    CHECK(t.contents == std::vector<int>{-2, -3, -1, 1, 0, 3, 2, 4, 3, 5});
    auto sq = column_tableau(SkewDiagram({2, 2}));
    CHECK(sq.boxes == std::vector<Box>{{1, 1}, {2, 1}, {1, 2}, {2, 2}});
    CHECK(sq.contents == std::vector<int>{0, -1, 1, 0});
    CHECK(column_tableau(SkewDiagram({1})).contents == std::vector<int>{0});
    for (const auto& w : all_up_to(5)) {
        auto tab = column_tableau(w);
        REQUIRE(tab.boxes.size() == w.size());
        for (std::size_t p = 0; p < tab.boxes.size(); ++p) {
            CHECK(tab.contents[p] == tab.boxes[p].second - tab.boxes[p].first);
            CHECK(w.contains(tab.boxes[p].first, tab.boxes[p].second));
            if (p > 0) {
                auto [i0, j0] = tab.boxes[p - 1];
                auto [i1, j1] = tab.boxes[p];
                CHECK((j0 < j1 || (j0 == j1 && i0 < i1)));
            }
        }
    }
}

TEST_CASE("sharp of the worked example") {
    auto s = sharp(SkewDiagram({6, 5, 3, 1}, {3, 2}));
    CHECK(s.diagram == SkewDiagram({6, 6, 4, 3}, {5, 3, 1}));
    CHECK(s.c == 2);
    auto one = sharp(SkewDiagram({1}));
    CHECK(one.diagram == SkewDiagram({1}));
    CHECK(one.c == 0);
}

TEST_CASE("sharp is an involution with a constant content sum") {
    for (const auto& w : all_up_to(6)) {
        auto s = sharp(w);
        CHECK(s.diagram.size() == w.size());
        CHECK(sharp(s.diagram).diagram == w);
        auto a = column_tableau(w).contents;
        auto b = column_tableau(s.diagram).contents;
        const std::size_t n = a.size();
        for (std::size_t p = 0; p < n; ++p) CHECK(a[p] + b[n - 1 - p] == s.c);
    }
}

TEST_CASE("SSYT counts match the Jacobi–Trudi determinant") {
    CHECK(ssyt_count(SkewDiagram({1}), 3) == 3);
    CHECK(ssyt_count(SkewDiagram({2, 2}), 3) == 6);
    CHECK(ssyt_count(SkewDiagram({2, 1}, {1}), 2) == 4);
    CHECK(ssyt_count(SkewDiagram({1, 1, 1}), 2) == 0);
    for (int N = 1; N <= 4; ++N)
        for (const auto& w : all_up_to(5)) CHECK(Rational(static_cast<long>(ssyt_count(w, N))) == jacobi_trudi(w, N));
}

TEST_CASE("fit check and enumeration") {
    CHECK_NOTHROW(check_fits(SkewDiagram({1, 1}), 2));
    CHECK_THROWS_AS(check_fits(SkewDiagram({1, 1, 1}), 2), Error);
    // A skew shape whose rows overlap in no column fits regardless of its row count.
    CHECK_NOTHROW(check_fits(SkewDiagram({3, 2, 1}, {2, 1}), 1));
    CHECK(SkewDiagram({2, 2, 1}).max_column_height() == 3);
    auto three = enumerate_skew(3, 3, 3);
    CHECK(three.size() == 13);
    std::set<std::string> names;
    for (const auto& d : three) {
        CHECK(d.size() == 3);
        names.insert(d.str());
    }
    CHECK(names.size() == three.size());
    CHECK(names.count("2,1") == 1);
    CHECK(names.count("3") == 1);
}
