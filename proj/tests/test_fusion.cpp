#include <doctest.h>

#include <cmath>

#include "twyang/diagrams.hpp"
#include "twyang/fusion.hpp"
#include "twyang/gform.hpp"
#include "twyang/linalg.hpp"
#include "twyang/ratfunc.hpp"
#include "twyang/tensor.hpp"

using namespace twyang;

namespace {

// Lexicographic product of 1 - P_pq / (v_p - v_q) with v_p = c_p + col(p) ε as exact functions of ε, then ε = 0.
Matrix<Rational> ratfunc_limit(const SkewDiagram& w, int N) {
    auto t = column_tableau(w);
    const std::size_t n = t.boxes.size();
    const std::size_t dim = static_cast<std::size_t>(std::pow(N, n));
    auto P = flip(static_cast<std::size_t>(N)).map<RatFunc>([](const Rational& x) { return RatFunc(x); });
    const auto one = Matrix<RatFunc>::identity(static_cast<std::size_t>(N * N));
    auto prod = Matrix<RatFunc>::identity(dim);
    const RatFunc eps = RatFunc::x();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            RatFunc vp = RatFunc(Rational(t.contents[p])) + RatFunc(Rational(t.boxes[p].second)) * eps;
            RatFunc vq = RatFunc(Rational(t.contents[q])) + RatFunc(Rational(t.boxes[q].second)) * eps;
            auto factor = one - P * (RatFunc(1) / (vp - vq));
            prod = prod * embed_two_leg(factor, p, q, n);
        }
    return prod.map<Rational>([](const RatFunc& f) { return f(Rational(0)); });
}

std::vector<SkewDiagram> small_diagrams(int max_boxes) {
    std::vector<SkewDiagram> out;
    for (int b = 1; b <= max_boxes; ++b)
        for (auto& d : enumerate_skew(b, b, b)) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("fusion of one and two boxes") {
    for (int N : {2, 3}) {
        const auto n = static_cast<std::size_t>(N);
        auto box = fusion_operator(SkewDiagram({1}), N);
        CHECK(box->matrix == Matrix<Rational>::identity(n));
        CHECK(box->dim() == n);
        auto vert = fusion_operator(SkewDiagram({1, 1}), N);
        CHECK(vert->matrix == Matrix<Rational>::identity(n * n) - flip(n));
        CHECK(vert->dim() == n * (n - 1) / 2);
        auto hor = fusion_operator(SkewDiagram({2}), N);
        CHECK(hor->matrix == Matrix<Rational>::identity(n * n) + flip(n));
        CHECK(hor->dim() == n * (n + 1) / 2);
    }
    CHECK(fusion_operator(SkewDiagram({2, 2}), 2)->dim() == 1);
}

TEST_CASE("empty diagram fuses to the scalar one") {
    auto e = fusion_operator(SkewDiagram(), 2);
    CHECK(e->matrix == Matrix<Rational>::identity(1));
    CHECK(e->dim() == 1);
}

TEST_CASE("series limit agrees with the rational-function product at epsilon = 0") {
    for (const auto& w : small_diagrams(3)) {
        if (w.max_column_height() > 2) continue;
        CHECK(fusion_operator(w, 2)->matrix == ratfunc_limit(w, 2));
    }
    CHECK(fusion_operator(SkewDiagram({2, 2}), 2)->matrix == ratfunc_limit(SkewDiagram({2, 2}), 2));
    CHECK(fusion_operator(SkewDiagram({2, 1}), 3)->matrix == ratfunc_limit(SkewDiagram({2, 1}), 3));
}

TEST_CASE("fusion invariants on diagrams with at most three boxes") {
    for (int N : {2, 3}) {
        auto form = GForm::standard(N % 2 ? FormKind::Orthogonal : FormKind::Symplectic, static_cast<std::size_t>(N));
        for (const auto& w : small_diagrams(3)) {
            if (w.max_column_height() > N) continue;
            auto f = fusion_operator(w, N);
            auto r = verify_fusion_invariants(*f, form);
            CHECK(r.ok());
            CHECK(r.dim == r.ssyt);
            CHECK(rank(f->matrix) == f->dim());
        }
    }
    auto r = verify_fusion_invariants(*fusion_operator(SkewDiagram({2, 2}, {1}), 2), GForm::standard(FormKind::Orthogonal, 2));
    CHECK(r.ok());
    CHECK(r.dim == ssyt_count(SkewDiagram({2, 2}, {1}), 2));
}

TEST_CASE("fusion operator intertwines the reversed and ordered box actions") {
    CHECK(intertwining_check(SkewDiagram({1}), 2, Rational(1, 3)).ok());
    CHECK(intertwining_check(SkewDiagram({1, 1}), 2, Rational(1, 3)).ok());
    CHECK(intertwining_check(SkewDiagram({2}), 2, Rational(2, 5)).ok());
    CHECK(intertwining_check(SkewDiagram({2, 1}), 2, Rational(-3, 7)).ok());
    // Contents of the vertical domino are (0, -1), so u = z - 1 meets the second box.
    CHECK_THROWS_AS(intertwining_check(SkewDiagram({1, 1}), 2, Rational(1, 3), {Rational(-2, 3)}), Error);
}

TEST_CASE("fusion input errors") {
    CHECK_THROWS_AS(fusion_operator(SkewDiagram({7}), 2), Error);
    CHECK_NOTHROW(fusion_operator(SkewDiagram({3}), 2, {}, 3));
    CHECK_THROWS_AS(fusion_operator(SkewDiagram({1, 1, 1}), 2), Error);
    CHECK_THROWS_AS(fusion_operator(SkewDiagram({2}), 2, {1, 1}), Error);
    CHECK_THROWS_AS(fusion_operator(SkewDiagram({2}), 2, {1}), Error);
    try {
        fusion_operator(SkewDiagram({1, 1, 1}), 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ShapeExceedsDimension);
    }
    try {
        fusion_operator(SkewDiagram({4, 3}), 3);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoxCapExceeded);
    }
}
