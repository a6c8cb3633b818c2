#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twyang/diagrams.hpp"
#include "twyang/fusion.hpp"
#include "twyang/gform.hpp"
#include "twyang/matrix.hpp"
#include "twyang/matseries.hpp"
#include "twyang/ratfunc.hpp"
#include "twyang/rational.hpp"
#include "twyang/tensor.hpp"

namespace twyang {

// ---------------------------------------------------------------------------------------------
// Yang matrices on C^N ⊗ C^N

/// R(u,v) = u - v - P.
template <class T>
Matrix<T> yang_R(const GForm& form, const T& u, const T& v) {
    const std::size_t N = form.N();
    auto P = flip(N).template map<T>([](const Rational& x) { return T(x); });
    return Matrix<T>::identity(N * N) * (u - v) - P;
}

/// R'(u,v) = -(u + v + Q).
template <class T>
Matrix<T> yang_R_prime(const GForm& form, const T& u, const T& v) {
    const std::size_t N = form.N();
    auto Q = q_operator(form).template map<T>([](const Rational& x) { return T(x); });
    return (Matrix<T>::identity(N * N) * (u + v) + Q) * T(-1);
}

/// R̆(u,v) = 1 - P/(u - v); throws SingularParameter at u = v.
template <class T>
Matrix<T> yang_R_breve(const GForm& form, const T& u, const T& v) {
    if (is_zero(u - v)) throw Error(ErrorKind::SingularParameter, "R̆(u, v) at u = v");
    const std::size_t N = form.N();
    auto P = flip(N).template map<T>([](const Rational& x) { return T(x); });
    return Matrix<T>::identity(N * N) - P * (T(1) / (u - v));
}

/// R̆'(u,v) = 1 + Q/(u + v); throws SingularParameter at u = -v.
template <class T>
Matrix<T> yang_R_breve_prime(const GForm& form, const T& u, const T& v) {
    if (is_zero(u + v)) throw Error(ErrorKind::SingularParameter, "R̆'(u, v) at u = -v");
    const std::size_t N = form.N();
    auto Q = q_operator(form).template map<T>([](const Rational& x) { return T(x); });
    return Matrix<T>::identity(N * N) + Q * (T(1) / (u + v));
}

template <class T>
struct YangMatrices {
    Matrix<T> R, R_prime, R_breve, R_breve_prime;
};

template <class T>
YangMatrices<T> yang_matrices(const GForm& form, const T& u, const T& v) {
    return {yang_R(form, u, v), yang_R_prime(form, u, v), yang_R_breve(form, u, v), yang_R_breve_prime(form, u, v)};
}

// ---------------------------------------------------------------------------------------------
// Fused modules

struct ModuleFactor {
    SkewDiagram diagram;
    Rational z;
};

/// Z = V_ω1(z_1) ⊗ ... ⊗ V_ωℓ(z_ℓ) inside (C^N)^{⊗n}; basis = Kronecker product of the fusion images.
class FusedModuleSpec {
   public:
    /// Throws ShapeExceedsDimension, BoxCapExceeded.
    FusedModuleSpec(GForm form, std::vector<ModuleFactor> factors, int box_cap = kDefaultBoxCap);
    /// Grammar "λ/μ:z;λ/μ:z;..."; the empty string is the empty spec.
    static FusedModuleSpec parse(const std::string& modules, GForm form, int box_cap = kDefaultBoxCap);
    std::string str() const;

    const GForm& form() const noexcept { return form_; }
    int N() const noexcept { return static_cast<int>(form_.N()); }
    const std::vector<ModuleFactor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    /// Total number of boxes n.
    std::size_t boxes() const noexcept { return boxes_; }
    int box_cap() const noexcept { return box_cap_; }

    const FusionOperator& fusion(std::size_t i) const { return *fusion_.at(i); }
    std::vector<std::size_t> dims() const;
    std::size_t dim() const;
    /// Basis of Z in (C^N)^{⊗n}.
    Basis<Rational> basis() const;

    /// Copy with every z_i replaced by z_i + s.
    FusedModuleSpec shifted(const Rational& s) const;
    /// Copy with new parameters; throws ArityMismatch if the count differs.
    FusedModuleSpec with_parameters(const std::vector<Rational>& z) const;

   private:
    GForm form_;
    std::vector<ModuleFactor> factors_;
    std::vector<std::shared_ptr<const FusionOperator>> fusion_;
    std::size_t boxes_ = 0;
    int box_cap_ = kDefaultBoxCap;
};

enum class RKind { R, RPrime, RBreve, RBrevePrime };

/// Box-level product for the pair of elementary modules (θ at u_p = w + c_p + a ζ, ω at v_q = z + c_q + b ζ),
/// restricted to V_θ ⊗ V_ω, as a series in ζ with relative precision `rel_prec`.
/// R, R̆: p = |θ|..1, q = 1..|ω|; R', R̆': p = |θ|..1, q = |ω|..1.
/// Throws SingularParameter when a breve denominator vanishes and a = b, NotInvariant if V_θ ⊗ V_ω is not preserved.
MatSeries<Rational> block_factor(RKind kind, const GForm& form, const FusionOperator& theta, const Rational& w, int a,
                                 const FusionOperator& omega, const Rational& z, int b, int rel_prec);

/// Numeric R_{W,Z} of the requested kind on W ⊗ Z (W factors first).
Matrix<Rational> r_factorized(const FusedModuleSpec& W, const FusedModuleSpec& Z, RKind kind);
/// R_{W,Z} with every W parameter shifted by ζ, as a series with relative precision `rel_prec`.
MatSeries<Rational> r_factorized_family(const FusedModuleSpec& W, const FusedModuleSpec& Z, RKind kind, int rel_prec);
/// Same family with exact rational-function entries in ζ (small dimensions only).
Matrix<RatFunc> r_factorized_symbolic(const FusedModuleSpec& W, const FusedModuleSpec& Z, RKind kind);

/// S_{V_ω}(z + ζ) = prod_{p=n..1} prod_{q=p-1..1} R'_pq(v_p, v_q) restricted to V_ω (polynomial in ζ).
MatSeries<Rational> s_elementary_family(const FusionOperator& f, const GForm& form, const Rational& z, int rel_prec);
Matrix<Rational> s_elementary(const SkewDiagram& omega, const Rational& z, const GForm& form);

/// S_Z = prod_{i=ℓ..1} (S_{V_i}(z_i) prod_{j=i-1..1} R'_{V_i,V_j}(z_i, z_j)) with all z_i shifted by ζ.
MatSeries<Rational> s_fused_family(const FusedModuleSpec& Z, int rel_prec);
Matrix<Rational> s_fused(const FusedModuleSpec& Z);

/// T_Z(u) on aux ⊗ Z (aux first): T_{V_1}(u) ··· T_{V_ℓ}(u), T_V(u) = R̆_01 ··· R̆_0n restricted.
/// Throws SingularParameter at u = z_j + c_q.
Matrix<Rational> t_action(const FusedModuleSpec& Z, const Rational& u);
/// T^t(-u) on aux ⊗ Z: T'_{V_ℓ}(u) ··· T'_{V_1}(u), T'_V(u) = R̆'_0n ··· R̆'_01 restricted.
Matrix<Rational> t_transposed_action(const FusedModuleSpec& Z, const Rational& u);
/// S(u) = T^t(-u) T(u) on aux ⊗ Z.
Matrix<Rational> s_action(const FusedModuleSpec& Z, const Rational& u);
/// T_Z(u) with rational-function entries in u.
Matrix<RatFunc> t_action_symbolic(const FusedModuleSpec& Z);

/// Series in x = 1/u, K + 1 coefficients, of T(u) and S(u) = T^t(-u) T(u) on aux ⊗ Z.
MatSeries<Rational> t_series_at_infinity(const FusedModuleSpec& Z, int K);
MatSeries<Rational> s_series_at_infinity(const FusedModuleSpec& Z, int K);

/// Per-factor series at infinity of T_{V_j} (primed: T'_{V_j}) restricted to aux ⊗ V_j, K + 1 coefficients.
std::vector<MatSeries<Rational>> aux_block_series(const FusedModuleSpec& Z, int K, bool primed);

struct SuperlegFactor {
    MatSeries<Rational> op;
    std::vector<std::size_t> legs;
};

/// Factors of S_{W,Z}(ζ) = R̆'_{W,Z} S_W R̆_{W,Z} in product order, where W is Z with every parameter shifted by ζ.
/// Superleg layout W_1..W_ℓ, Z_1..Z_ℓ.
std::vector<SuperlegFactor> s_wz_factors(const FusedModuleSpec& Z, int rel_prec);
/// Product of `s_wz_factors`: a Laurent series in ζ with relative precision `rel_prec`.
MatSeries<Rational> s_wz_family(const FusedModuleSpec& Z, int rel_prec);

/// rho(S^(k)_ij), indexed [k][i][j] with 0 <= k <= K.
struct GeneratorMatrices {
    int K = 0;
    std::vector<std::vector<std::vector<Matrix<Rational>>>> S;
};
GeneratorMatrices s_generators(const FusedModuleSpec& Z, int K);

/// Extracts the (i, j) block of an operator on aux ⊗ Z.
template <class T>
Matrix<T> aux_block(const Matrix<T>& m, std::size_t N, std::size_t i, std::size_t j) {
    const std::size_t d = m.rows() / N;
    Matrix<T> b(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) b(r, c) = m(i * d + r, j * d + c);
    return b;
}

struct RelationSample {
    Rational u, v;
    bool singular = false;
    bool rtt = false;
    bool reflection = false;
    std::string error;
};

struct RelationReport {
    std::vector<RelationSample> samples;
    std::size_t degree_bound = 0;
    std::size_t evaluated = 0;
    bool rtt = false;
    bool reflection = false;
    bool ok() const { return rtt && reflection; }
};

/// RTT and reflection relations on aux ⊗ aux ⊗ Z at the given (u, v); default: 2n + 3 pole-free samples.
/// A relation passes when it holds at every evaluated sample and more than 2n + 2 samples were evaluated.
RelationReport check_defining_relations(const FusedModuleSpec& Z, const std::vector<std::pair<Rational, Rational>>& samples = {});

struct DualityReport {
    std::size_t samples = 0;
    std::size_t passed = 0;
    bool ok() const { return samples > 0 && passed == samples; }
};

/// Checks ρ♯(h) F_{ω♯} = σ̂ (ρ(τ h) F_ω)^{t} σ̂ for h = R̆_0n(u, w_n) ··· R̆_01(u, w_1) at the given u samples
/// (default: 2n + 2 pole-free values), where ρ♯ evaluates at w = z♯ + c♯ and ρ at w = z + c.
DualityReport duality_check(const SkewDiagram& omega, const Rational& z, const GForm& form,
                            const std::vector<Rational>& u_samples = {});

}  // namespace twyang
