#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twyang/matrix.hpp"
#include "twyang/modp.hpp"
#include "twyang/rational.hpp"
#include "twyang/repmatrix.hpp"

namespace twyang {

enum class WallKind { Single, Difference, Sum };

/// z_i ∈ ½ℤ (Single), z_i - z_j ∈ ℤ (Difference) or z_i + z_j ∈ ℤ (Sum); indices are 0-based.
struct WallConstraint {
    WallKind kind = WallKind::Single;
    std::size_t i = 0, j = 0;
    bool violated = false;
    /// "z1 in 1/2Z", "z1 - z2 in Z", "z1 + z2 in Z" (1-based).
    std::string str() const;
};

struct WallSet {
    std::vector<WallConstraint> constraints;
    bool on_wall() const;
    std::vector<std::string> violated() const;
};

WallSet walls(const FusedModuleSpec& Z);
bool on_wall(const std::vector<Rational>& z);

/// `count` parameter tuples of length `ell` off every wall: z_i = a_i / p_i with distinct odd primes p_i
/// and a_i prime to p_i. Deterministic in `seed`.
std::vector<std::vector<Rational>> off_wall_points(std::size_t ell, std::size_t count, std::uint64_t seed);

// ---------------------------------------------------------------------------------------------

/// A ↦ coefficient of ζ^order in Tr_W((A ⊗ 1) S_{W,Z}(ζ)), as a (dimZ)² × (dimZ)² matrix.
template <class T>
struct PhiOperatorT {
    int order = 0;
    Matrix<T> map;
};
using PhiOperator = PhiOperatorT<Rational>;

/// The first coefficient of the ζ-family whose contraction is nonzero, looking at most `depth` coefficients past the
/// matrix-level leading order. Throws ExhaustedDepth.
template <class T>
PhiOperatorT<T> phi_leading(const FusedModuleSpec& Z, int depth = 3);

struct Surjectivity {
    std::size_t rank = 0;
    bool surjective = false;
};

template <class T>
Surjectivity surjectivity(const PhiOperatorT<T>& phi);

/// ρ(S^(k)_ij) for 0 <= k <= K, computed in T.
template <class T>
std::vector<std::vector<std::vector<Matrix<T>>>> generator_matrices(const FusedModuleSpec& Z, int K);

struct CommutantResult {
    std::size_t dim = 0;
    /// Dimension with generators up to K - 1.
    std::size_t dim_previous = 0;
    bool stabilized = false;
    /// "krylov" when a cyclic generator combination was found, else "full".
    std::string method;
};

/// Dimension of the commutant of {ρ(S^(k)_ij) : 1 <= k <= K}. Over ModP the result bounds the rational
/// dimension from above. Requires K >= 2. `force_full` skips the cyclic-generator shortcut.
template <class T>
CommutantResult commutant_dim(const FusedModuleSpec& Z, int K, std::uint64_t seed = 0, bool force_full = false);

/// Rank of a matrix by forward elimination.
template <class T>
std::size_t fast_rank(Matrix<T> a);

// ---------------------------------------------------------------------------------------------

enum class Verdict { Irreducible, Inconclusive, Reducible };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

enum class Arithmetic { Auto, Rational, ModP };
std::string to_string(Arithmetic a);

struct IrreducibilityOptions {
    /// 0 selects 2n + 2.
    int K = 0;
    int depth = 3;
    Arithmetic arithmetic = Arithmetic::Auto;
    std::uint64_t seed = 0;
};

/// dimZ above which Auto switches to arithmetic modulo a prime.
inline constexpr std::size_t kExactDimLimit = 9;

struct IrreducibilityReport {
    std::string spec;
    std::string form;
    int N = 0;
    std::vector<std::string> on_wall;
    int laurent_order = 0;
    std::size_t phi_rank = 0;
    bool phi_surjective = false;
    std::size_t commutant_dim = 0;
    int K = 0;
    bool stabilized = false;
    Verdict verdict = Verdict::Inconclusive;
    /// "rational" or "modp".
    std::string arithmetic;
    bool commutant_exact = false;
    bool operator==(const IrreducibilityReport&) const = default;
};

/// Walls, Φ₀ surjectivity and the commutant oracle combined. Irreducible if either test certifies it; reducible
/// only from an exact commutant of dimension > 1 that is stable in K. Throws InternalInconsistency if Φ₀ is
/// surjective while the commutant is larger than the scalars.
IrreducibilityReport irreducibility_verdict(const FusedModuleSpec& Z, const IrreducibilityOptions& options = {});

}  // namespace twyang
