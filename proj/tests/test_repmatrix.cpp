#include <doctest.h>

#include <algorithm>

#include "twyang/gform.hpp"
#include "twyang/linalg.hpp"
#include "twyang/repmatrix.hpp"
#include "twyang/tensor.hpp"

using namespace twyang;

namespace {

GForm so(std::size_t N) { return GForm::standard(FormKind::Orthogonal, N); }
GForm sp(std::size_t N) { return GForm::standard(FormKind::Symplectic, N); }

bool proportional(const Matrix<Rational>& a, const Matrix<Rational>& b, Rational& scale) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!(b(i, j) == Rational(0))) {
                scale = a(i, j) / b(i, j);
                return a == b * scale;
            }
    return false;
}

}  // namespace

TEST_CASE("Yang matrices") {
    auto g = so(2);
    auto P = flip(2);
    CHECK(yang_R(g, Rational(1), Rational(0)) == Matrix<Rational>::identity(4) - P);
    for (auto form : {so(2), sp(2), so(3)}) {
        Rational u1(5), u2(2), u3(-1);
        const std::size_t n = 3;
        auto R12 = embed_two_leg(yang_R(form, u1, u2), 0, 1, n);
        auto R13 = embed_two_leg(yang_R(form, u1, u3), 0, 2, n);
        auto R23 = embed_two_leg(yang_R(form, u2, u3), 1, 2, n);
        CHECK(R12 * R13 * R23 == R23 * R13 * R12);
        Rational u(7, 3), v(-2, 5);
        CHECK(yang_R_breve(form, u, v) * (u - v) == yang_R(form, u, v));
        CHECK(yang_R_breve_prime(form, u, v) * (u + v) == yang_R_prime(form, u, v) * Rational(-1));
    }
    CHECK_THROWS_AS(yang_R_breve(g, Rational(2), Rational(2)), Error);
    CHECK_THROWS_AS(yang_R_breve_prime(g, Rational(2), Rational(-2)), Error);
}

TEST_CASE("module spec grammar") {
    auto Z = FusedModuleSpec::parse("1:1/3;1,1:7/5", sp(2));
    CHECK(Z.size() == 2);
    CHECK(Z.boxes() == 3);
    CHECK(Z.dims() == std::vector<std::size_t>{2, 1});
    CHECK(Z.factors()[1].z == Rational(7, 5));
    CHECK(FusedModuleSpec::parse("", sp(2)).size() == 0);
    CHECK(FusedModuleSpec::parse("", sp(2)).dim() == 1);
    CHECK_THROWS_AS(FusedModuleSpec::parse("1", sp(2)), Error);
    CHECK_THROWS_AS(FusedModuleSpec::parse("1:1/3;", sp(2)), Error);
    CHECK_THROWS_AS(FusedModuleSpec::parse("1,1,1:0", sp(2)), Error);
    CHECK_THROWS_AS(FusedModuleSpec::parse("2,2:0;2,1:0", so(3)), Error);
    CHECK_THROWS_AS(Z.with_parameters({Rational(1)}), Error);
    CHECK(Z.shifted(Rational(1)).factors()[0].z == Rational(4, 3));
}

TEST_CASE("factorized R-matrices on single boxes") {
    auto g = so(2);
    auto W = FusedModuleSpec::parse("1:3", g);
    auto Z = FusedModuleSpec::parse("1:1", g);
    CHECK(r_factorized(W, Z, RKind::R) == yang_R(g, Rational(3), Rational(1)));
    CHECK(r_factorized(W, Z, RKind::RPrime) == yang_R_prime(g, Rational(3), Rational(1)));
    CHECK(r_factorized(W, Z, RKind::RBreve) == yang_R_breve(g, Rational(3), Rational(1)));

    // W = Z shifted by ζ: R̆ = 1 - P/ζ.
    auto Zz = FusedModuleSpec::parse("1:2/7", g);
    auto fam = r_factorized_family(Zz, Zz, RKind::RBreve, 3);
    CHECK(fam.order() == -1);
    CHECK(fam.coeff(-1) == flip(2) * Rational(-1));
    CHECK(fam.coeff(0) == Matrix<Rational>::identity(4));
    CHECK_THROWS_AS(r_factorized(Zz, Zz, RKind::RBreve), Error);
}

TEST_CASE("series family agrees with the rational-function family") {
    auto g = sp(2);
    auto W = FusedModuleSpec::parse("1:1/3;1:7/5", g);
    auto Z = FusedModuleSpec::parse("1,1:2/3", g);
    for (RKind kind : {RKind::R, RKind::RPrime, RKind::RBreve, RKind::RBrevePrime}) {
        auto fam = r_factorized_family(W, Z, kind, 4);
        auto sym = r_factorized_symbolic(W, Z, kind);
        REQUIRE(sym.rows() == fam.rows());
        for (std::size_t i = 0; i < sym.rows(); ++i)
            for (std::size_t j = 0; j < sym.cols(); ++j) {
                if (sym(i, j).is_zero()) {
                    for (int k = fam.start(); k < fam.prec(); ++k) CHECK(fam.coeff(k)(i, j) == Rational(0));
                    continue;
                }
                auto e = sym(i, j).laurent_at(Rational(0), fam.prec() - fam.start() + 2);
                for (int k = fam.start(); k < fam.prec(); ++k) {
                    Rational want = k < e.order ? Rational(0) : e.coefficients[static_cast<std::size_t>(k - e.order)];
                    CHECK(fam.coeff(k)(i, j) == want);
                }
            }
    }
}

TEST_CASE("leading coefficient of the breve family is proportional to the superleg flip") {
    for (auto form : {sp(2), so(3)}) {
        auto Z = FusedModuleSpec::parse("1:1/3;1:7/5", form);
        auto fam = r_factorized_family(Z, Z, RKind::RBreve, 2);
        const int r = fam.order();
        auto swap = permutation_op({2, 3, 0, 1}, form.N());
        Rational h;
        CHECK(proportional(fam.coeff(r), swap, h));
        CHECK_FALSE(h == Rational(0));
    }
}

TEST_CASE("elementary and fused S-matrices") {
    auto g = so(2);
    CHECK(s_elementary(SkewDiagram({1}), Rational(1, 3), g) == Matrix<Rational>::identity(2));
    // Vertical domino: one factor -(v2 + v1 + Q) with Q vanishing on the antisymmetric line.
    CHECK(s_elementary(SkewDiagram({1, 1}), Rational(1), g) == Matrix<Rational>::identity(1) * Rational(-1));

    auto Z1 = FusedModuleSpec::parse("2,1:2/5", sp(2));
    CHECK(s_fused(Z1) == s_elementary(SkewDiagram({2, 1}), Rational(2, 5), sp(2)));
    CHECK(s_fused(FusedModuleSpec::parse("1:1/3", sp(2))) == Matrix<Rational>::identity(2));
    CHECK_FALSE(determinant(s_fused(FusedModuleSpec::parse("1:1/3;1:7/5", sp(2)))) == Rational(0));
}

TEST_CASE("fused S-matrix agrees with both bracketings of the coproduct") {
    for (auto form : {so(2), sp(2)}) {
        auto Z = FusedModuleSpec::parse("1:1/3;1:7/5;1:-2/9", form);
        const auto N = form.N();
        auto layout = LegLayout::uniform(N, 3);
        auto I = Matrix<Rational>::identity(N);
        auto V1 = FusedModuleSpec::parse("1:1/3", form), V2 = FusedModuleSpec::parse("1:7/5", form),
             V3 = FusedModuleSpec::parse("1:-2/9", form);
        auto V12 = FusedModuleSpec::parse("1:1/3;1:7/5", form), V23 = FusedModuleSpec::parse("1:7/5;1:-2/9", form);
        // (V1 ⊗ V2) ⊗ V3: S_3 R'_{3,(12)} S_{12}.
        auto left = kron(kron(I, I), s_fused(V3)) * embed(r_factorized(V3, V12, RKind::RPrime), {2, 0, 1}, layout) *
                    kron(s_fused(V12), I);
        // V1 ⊗ (V2 ⊗ V3): S_{23} R'_{(23),1} S_1.
        auto right = kron(I, s_fused(V23)) * embed(r_factorized(V23, V1, RKind::RPrime), {1, 2, 0}, layout) *
                     kron(s_fused(V1), kron(I, I));
        auto direct = s_fused(Z);
        CHECK(direct == left);
        CHECK(direct == right);
    }
}

TEST_CASE("s_elementary is invertible off its exceptional set") {
    for (auto form : {so(2), so(3), sp(2)}) {
        const Rational N(static_cast<long>(form.N()));
        for (auto w : {SkewDiagram({1, 1}), SkewDiagram({2}), SkewDiagram({2, 1})}) {
            if (w.max_column_height() > static_cast<int>(form.N())) continue;
            auto c = column_tableau(w).contents;
            std::vector<Rational> bad;
            for (std::size_t p = 0; p < c.size(); ++p)
                for (std::size_t q = p + 1; q < c.size(); ++q) {
                    bad.push_back(Rational(-(c[p] + c[q]), 2));
                    bad.push_back((Rational(-(c[p] + c[q])) - N) / Rational(2));
                }
            for (int k = -16; k <= 16; ++k) {
                Rational z(k, 4);
                if (determinant(s_elementary(w, z, form)) == Rational(0))
                    CHECK(std::find(bad.begin(), bad.end(), z) != bad.end());
            }
        }
    }
}

TEST_CASE("Yangian action and twisted generators") {
    auto g = sp(2);
    auto Z = FusedModuleSpec::parse("1:1/3", g);
    Rational u(5, 2);
    CHECK(t_action(Z, u) == yang_R_breve(g, u, Rational(1, 3)));
    CHECK_THROWS_AS(t_action(Z, Rational(1, 3)), Error);

    // S(u) = T^t(-u) T(u) equals R̆'_{W,Z} S_W R̆_{W,Z} for an auxiliary box W at u.
    for (auto spec : {"1:1/3;1:7/5", "1,1:2/5", "2:1/7;1:3/4"}) {
        auto Zs = FusedModuleSpec::parse(spec, g);
        auto W = FusedModuleSpec::parse("1:5/2", g);
        CHECK(s_action(Zs, u) == r_factorized(W, Zs, RKind::RBrevePrime) * r_factorized(W, Zs, RKind::RBreve));
    }

    // Single box: T = 1 - P/(u - z), T^t(-u) = 1 + Q/(u + z), so S^(1) = Q - P.
    auto gen = s_generators(Z, 3);
    auto S1 = q_operator(g) - flip(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(gen.S[0][i][j] == Matrix<Rational>::identity(2) * Rational(i == j ? 1 : 0));
            CHECK(gen.S[1][i][j] == aux_block(S1, 2, i, j));
        }
}

TEST_CASE("expansion at infinity agrees with the symbolic action") {
    auto g = so(3);
    auto Z = FusedModuleSpec::parse("1:1/3;1,1:-2/5", g);
    const int K = 4;
    auto ser = t_series_at_infinity(Z, K);
    auto sym = t_action_symbolic(Z);
    CHECK(ser.coeff(0) == Matrix<Rational>::identity(ser.rows()));
    for (std::size_t i = 0; i < sym.rows(); ++i)
        for (std::size_t j = 0; j < sym.cols(); ++j) {
            auto c = sym(i, j).series_at_infinity(K);
            for (int k = 0; k <= K; ++k) CHECK(ser.coeff(k)(i, j) == c[static_cast<std::size_t>(k)]);
        }
    auto s = s_series_at_infinity(Z, K);
    CHECK(s.coeff(0) == Matrix<Rational>::identity(s.rows()));
}

TEST_CASE("defining relations in representations") {
    for (auto spec : {"1:1/3;1:7/5", "1,1:1/3", "1:0", "2,1/1:2/9"}) {
        auto r = check_defining_relations(FusedModuleSpec::parse(spec, sp(2)));
        CHECK(r.ok());
        CHECK(r.evaluated > r.degree_bound);
    }
    CHECK(check_defining_relations(FusedModuleSpec::parse("1:1/3;1:7/5", so(3))).ok());

    // A sample at a pole is flagged and excluded; too few evaluated samples cannot pass.
    auto Z = FusedModuleSpec::parse("1:1/3", sp(2));
    auto r = check_defining_relations(Z, {{Rational(1, 3), Rational(2)}, {Rational(2), Rational(3)}});
    REQUIRE(r.samples.size() == 2);
    CHECK(r.samples[0].singular);
    CHECK_FALSE(r.samples[1].singular);
    CHECK(r.samples[1].rtt);
    CHECK(r.samples[1].reflection);
    CHECK(r.evaluated == 1);
    CHECK_FALSE(r.ok());
}

TEST_CASE("duality with the rotated diagram") {
    CHECK(duality_check(SkewDiagram({1}), Rational(1, 3), sp(2)).ok());
    CHECK(duality_check(SkewDiagram({1, 1}), Rational(2, 5), sp(2)).ok());
    CHECK(duality_check(SkewDiagram({1, 1}), Rational(2, 5), so(2)).ok());
    CHECK(duality_check(SkewDiagram({2}), Rational(-1, 7), so(3)).ok());
    CHECK(duality_check(SkewDiagram({2, 1}, {1}), Rational(3, 11), sp(2)).ok());
    // Both sides evaluate at the rotated parameters -z - c, so the pole sits at u = -z.
    CHECK_THROWS_AS(duality_check(SkewDiagram({1}), Rational(1, 3), sp(2), {Rational(-1, 3)}), Error);
}
