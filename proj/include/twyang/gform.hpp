#pragma once

#include <string>

#include "twyang/matrix.hpp"
#include "twyang/rational.hpp"

namespace twyang {

enum class FormKind { Orthogonal, Symplectic };

std::string to_string(FormKind k);
/// "so" | "sp" (also accepts "orthogonal" | "symplectic").
FormKind parse_form_kind(const std::string& s);

/// The bilinear form g defining the transposition A^t = g A^T g^{-1}.
class GForm {
   public:
    /// Identity for orthogonal; J = sum_{i <= N/2} (e_{i,i+N/2} - e_{i+N/2,i}) for symplectic.
    static GForm standard(FormKind kind, std::size_t N);
    /// Validates symmetry/antisymmetry and non-degeneracy; throws InvalidForm.
    static GForm custom(FormKind kind, Matrix<Rational> g);

    FormKind kind() const noexcept { return kind_; }
    std::size_t N() const noexcept { return g_.rows(); }
    const Matrix<Rational>& g() const noexcept { return g_; }
    const Matrix<Rational>& g_inverse() const noexcept { return ginv_; }

    /// x -> g x^T g^{-1} on a single N x N matrix.
    Matrix<Rational> transpose(const Matrix<Rational>& x) const;

   private:
    GForm(FormKind kind, Matrix<Rational> g);
    FormKind kind_;
    Matrix<Rational> g_, ginv_;
};

}  // namespace twyang
