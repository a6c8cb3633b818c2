#pragma once

#include <memory>
#include <vector>

#include "twyang/diagrams.hpp"
#include "twyang/gform.hpp"
#include "twyang/matrix.hpp"
#include "twyang/rational.hpp"
#include "twyang/tensor.hpp"

namespace twyang {

inline constexpr int kDefaultBoxCap = 6;

/// F_ω on |ω| legs and a basis of its image V_ω.
struct FusionOperator {
    SkewDiagram diagram;
    int N = 0;
    Matrix<Rational> matrix;
    Basis<Rational> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Limit at ε = 0 of the lexicographically ordered product of 1 - P_pq / (v_p - v_q) over pairs p < q, along
/// v_p = c_p + s_col(p) ε. `slopes[j-1]` is the slope of column j (default: j). Results for default slopes are
/// cached. Throws BoxCapExceeded, ShapeExceedsDimension, SlopeCollision, LimitSingular.
std::shared_ptr<const FusionOperator> fusion_operator(const SkewDiagram& omega, int N, const std::vector<int>& slopes = {},
                                                      int box_cap = kDefaultBoxCap);

struct FusionReport {
    bool t_invariant = false;
    bool sharp_conjugation = false;
    bool slope_independent = false;
    bool dimension_matches = false;
    std::size_t dim = 0;
    std::uint64_t ssyt = 0;
    bool ok() const { return t_invariant && sharp_conjugation && slope_independent && dimension_matches; }
};

/// t^(n)(F) = F, σ̂ F σ̂ = F_{ω♯}, equality with the limit under reversed column slopes, dim V_ω = #SSYT.
FusionReport verify_fusion_invariants(const FusionOperator& f, const GForm& form);

struct IntertwiningReport {
    std::size_t samples = 0;
    std::size_t passed = 0;
    bool ok() const { return samples > 0 && passed == samples; }
};

/// Checks F · T_desc(u) = T_asc(u) · F on aux ⊗ (C^N)^{⊗n}, where T_asc = R̆_01(u,v_1)···R̆_0n(u,v_n),
/// T_desc the reversed product and v_p = z + c_p. Default samples: 2n + 2 values of u away from the v_p.
/// Throws SingularParameter if a given sample meets some v_p.
IntertwiningReport intertwining_check(const SkewDiagram& omega, int N, const Rational& z,
                                      const std::vector<Rational>& u_samples = {});

/// Ordered product R̆_0,legs[0](u, v[0]) ··· R̆_0,legs[m-1](u, v[m-1]) on aux ⊗ (C^N)^{⊗n} (aux is leg 0).
Matrix<Rational> aux_chain(int N, std::size_t n, const Rational& u, const std::vector<Rational>& v,
                           const std::vector<std::size_t>& legs);

}  // namespace twyang
