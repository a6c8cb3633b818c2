#include <doctest.h>

#include "twyang/irreducibility.hpp"
#include "twyang/repmatrix.hpp"
#include "twyang/tensor.hpp"

using namespace twyang;

namespace {

GForm so(std::size_t N) { return GForm::standard(FormKind::Orthogonal, N); }
GForm sp(std::size_t N) { return GForm::standard(FormKind::Symplectic, N); }

bool has_constraint(const WallSet& w, const std::string& s) {
    for (const auto& c : w.constraints)
        if (c.str() == s) return true;
    return false;
}

}  // namespace

TEST_CASE("wall families") {
    auto w1 = walls(FusedModuleSpec::parse("1:1/3", sp(2)));
    CHECK(w1.constraints.size() == 1);
    CHECK(has_constraint(w1, "z1 in 1/2Z"));
    CHECK_FALSE(w1.on_wall());

    auto w2 = walls(FusedModuleSpec::parse("1:1/3;1:-1/3", sp(2)));
    CHECK(w2.constraints.size() == 4);
    for (auto s : {"z1 in 1/2Z", "z2 in 1/2Z", "z1 - z2 in Z", "z1 + z2 in Z"}) CHECK(has_constraint(w2, s));
    CHECK(w2.violated() == std::vector<std::string>{"z1 + z2 in Z"});

    CHECK(walls(FusedModuleSpec::parse("", sp(2))).constraints.empty());
    CHECK(walls(FusedModuleSpec::parse("1:1/2", sp(2))).on_wall());
    CHECK(on_wall({Rational(1, 3), Rational(4, 3)}));
    CHECK(on_wall({Rational(-3)}));
    CHECK_FALSE(on_wall({Rational(1, 3), Rational(2, 5)}));
}

TEST_CASE("off-wall sampler is deterministic and avoids every wall") {
    auto a = off_wall_points(3, 25, 42);
    auto b = off_wall_points(3, 25, 42);
    CHECK(a == b);
    CHECK_FALSE(a == off_wall_points(3, 25, 43));
    for (const auto& z : a) {
        REQUIRE(z.size() == 3);
        CHECK_FALSE(on_wall(z));
        for (const auto& x : z) CHECK(x.denominator() >= 3);
    }
}

TEST_CASE("single box: leading operator from the two-factor computation") {
    const Rational z(1, 3);
    auto g = sp(2);
    auto Z = FusedModuleSpec::parse("1:1/3", g);
    auto phi = phi_leading<Rational>(Z);
    CHECK(phi.order == -1);
    // S_{W,Z}(ζ) = (1 + Q/(2z + ζ))(1 - P/ζ); the ζ^-1 coefficient is -(1 + Q/(2z)) P.
    auto M = (Matrix<Rational>::identity(4) + q_operator(g) * (Rational(1) / (Rational(2) * z))) * flip(2) * Rational(-1);
    CHECK(phi.map == contraction_map(M, 2));
    auto s = surjectivity(phi);
    CHECK(s.rank == 4);
    CHECK(s.surjective);
    auto c = commutant_dim<Rational>(Z, 4);
    CHECK(c.dim == 1);
    CHECK(c.stabilized);
}

TEST_CASE("two single boxes off the walls") {
    auto Z = FusedModuleSpec::parse("1:1/3;1:7/5", sp(2));
    auto s = surjectivity(phi_leading<Rational>(Z));
    CHECK(s.rank == 16);
    CHECK(s.surjective);
    auto rep = irreducibility_verdict(Z);
    CHECK(rep.verdict == Verdict::Irreducible);
    CHECK(rep.on_wall.empty());
    CHECK(rep.phi_surjective);
    CHECK(rep.commutant_dim == 1);
    CHECK(rep.K == 6);
    CHECK(rep.arithmetic == "rational");
    CHECK(rep.commutant_exact);
}

TEST_CASE("trivial module") {
    auto Z = FusedModuleSpec::parse("", sp(2));
    auto phi = phi_leading<Rational>(Z);
    CHECK(phi.map == Matrix<Rational>::identity(1));
    CHECK(surjectivity(phi).surjective);
    CHECK(irreducibility_verdict(Z).verdict == Verdict::Irreducible);
}

TEST_CASE("ModP and rational engines agree") {
    for (auto spec : {"1:1/3;1:7/5", "1:1/2;1:-1/2", "2:2/7", "1,1:1/5;1:3/11"}) {
        auto Z = FusedModuleSpec::parse(spec, so(3));
        auto pq = phi_leading<Rational>(Z);
        auto pp = phi_leading<ModP>(Z);
        CHECK(pq.order == pp.order);
        CHECK(surjectivity(pq).rank == surjectivity(pp).rank);
        CHECK(commutant_dim<Rational>(Z, 4).dim == commutant_dim<ModP>(Z, 4).dim);
    }
}

TEST_CASE("cyclic-vector and full commutant computations agree") {
    for (auto spec : {"1:1/3;1:7/5", "1:1/2;1:-1/2", "1:0;1:1", "2:1/2", "1,1:0"}) {
        auto Z = FusedModuleSpec::parse(spec, sp(2));
        for (int K : {2, 3, 6}) {
            auto fast = commutant_dim<Rational>(Z, K);
            auto full = commutant_dim<Rational>(Z, K, 0, true);
            CHECK(fast.dim == full.dim);
            CHECK(fast.dim_previous == full.dim_previous);
            if (Z.dim() > 1) CHECK(full.method == "full");
        }
    }
}

TEST_CASE("reducible point detected from a stable commutant") {
    auto Z = FusedModuleSpec::parse("1:1/2;1:-1/2", sp(2));
    auto rep = irreducibility_verdict(Z);
    CHECK(rep.commutant_dim == 2);
    CHECK(rep.stabilized);
    CHECK_FALSE(rep.phi_surjective);
    CHECK(rep.verdict == Verdict::Reducible);
    CHECK_FALSE(rep.on_wall.empty());
}

TEST_CASE("soundness on wall points") {
    for (auto form : {sp(2), so(2), so(3)}) {
        for (auto spec : {"1:1/2", "1:0", "1:1", "1:1/3;1:-1/3", "1:1/3;1:4/3", "1:0;1:1/2", "2:-1/2", "1,1:1/2"}) {
            auto Z = FusedModuleSpec::parse(spec, form);
            IrreducibilityReport rep;
            CHECK_NOTHROW(rep = irreducibility_verdict(Z));
            if (rep.phi_surjective) CHECK(rep.commutant_dim == 1);
            CHECK_FALSE(rep.on_wall.empty());
        }
    }
}

TEST_CASE("surjectivity verdict is stable under a global shift") {
    for (const auto& z : off_wall_points(2, 4, 9)) {
        auto Z = FusedModuleSpec::parse("1:0;1:0", sp(2)).with_parameters(z);
        auto a = surjectivity(phi_leading<Rational>(Z));
        auto b = surjectivity(phi_leading<Rational>(Z.shifted(Rational(1, 7))));
        CHECK(a.surjective);
        CHECK(a.surjective == b.surjective);
    }
}

TEST_CASE("commutant dimension is non-increasing in K") {
    for (auto spec : {"1:1/2;1:-1/2", "1:1/3;1:7/5", "2:1/2", "1:0;1:1"}) {
        auto Z = FusedModuleSpec::parse(spec, sp(2));
        std::size_t prev = Z.dim() * Z.dim();
        for (int K = 2; K <= 6; ++K) {
            auto c = commutant_dim<Rational>(Z, K, 0, true);
            CHECK(c.dim <= prev);
            CHECK(c.dim_previous >= c.dim);
            prev = c.dim;
        }
    }
}

TEST_CASE("verdict names") {
    for (auto v : {Verdict::Irreducible, Verdict::Inconclusive, Verdict::Reducible}) CHECK(parse_verdict(to_string(v)) == v);
    CHECK(to_string(Verdict::Irreducible) == "irreducible");
    CHECK_THROWS_AS(parse_verdict("maybe"), Error);
}
