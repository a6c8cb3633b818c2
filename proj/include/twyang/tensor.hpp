#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "twyang/error.hpp"
#include "twyang/gform.hpp"
#include "twyang/linalg.hpp"
#include "twyang/matrix.hpp"
#include "twyang/rational.hpp"

namespace twyang {

/// Index layout of a tensor product space V_0 ⊗ V_1 ⊗ ... with leg 0 the leftmost,
/// slowest-varying factor of the row-major vectorization.
class LegLayout {
   public:
    LegLayout() = default;
    explicit LegLayout(std::vector<std::size_t> dims);
    static LegLayout uniform(std::size_t N, std::size_t n) { return LegLayout(std::vector<std::size_t>(n, N)); }

    std::size_t legs() const noexcept { return dims_.size(); }
    std::size_t dim(std::size_t leg) const { return dims_.at(leg); }
    std::size_t stride(std::size_t leg) const { return strides_.at(leg); }
    std::size_t total() const noexcept { return total_; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

    std::size_t digit(std::size_t index, std::size_t leg) const { return (index / strides_[leg]) % dims_[leg]; }

   private:
    std::vector<std::size_t> dims_, strides_;
    std::size_t total_ = 1;
};

/// Offsets of the sub-block addressed by `legs` (op index in mixed radix of those legs) and
/// the base offsets over all remaining legs.
struct LegSelection {
    std::vector<std::size_t> op_offsets;
    std::vector<std::size_t> bases;
};
LegSelection select_legs(const LegLayout& layout, const std::vector<std::size_t>& legs);

/// out += (op acting on `legs`, identity elsewhere) · y.
template <class T>
void apply_on_legs_acc(const Matrix<T>& op, const LegSelection& sel, const Matrix<T>& y, Matrix<T>& out) {
    const std::size_t k = sel.op_offsets.size();
    const std::size_t cols = y.cols();
    for (std::size_t base : sel.bases) {
        for (std::size_t r = 0; r < k; ++r) {
            T* dst = out.row(base + sel.op_offsets[r]);
            for (std::size_t s = 0; s < k; ++s) {
                const T& o = op(r, s);
                if (is_zero(o)) continue;
                const T* src = y.row(base + sel.op_offsets[s]);
                for (std::size_t c = 0; c < cols; ++c) dst[c] += o * src[c];
            }
        }
    }
}

template <class T>
Matrix<T> apply_on_legs(const Matrix<T>& op, const std::vector<std::size_t>& legs, const LegLayout& layout,
                        const Matrix<T>& y) {
    if (y.rows() != layout.total()) throw Error(ErrorKind::DimensionMismatch, "operand does not match layout");
    auto sel = select_legs(layout, legs);
    if (op.rows() != sel.op_offsets.size() || !op.square())
        throw Error(ErrorKind::DimensionMismatch, "leg operator size does not match selected legs");
    Matrix<T> out(y.rows(), y.cols());
    apply_on_legs_acc(op, sel, y, out);
    return out;
}

/// Full matrix of `op` acting on `legs` (first slot on legs[0]) and identity elsewhere.
template <class T>
Matrix<T> embed(const Matrix<T>& op, const std::vector<std::size_t>& legs, const LegLayout& layout) {
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (legs[i] >= layout.legs()) throw Error(ErrorKind::IndexOutOfRange, "leg index out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (legs[i] == legs[j]) throw Error(ErrorKind::IndexOutOfRange, "repeated leg index");
    }
    return apply_on_legs(op, legs, layout, Matrix<T>::identity(layout.total()));
}

/// Two-leg embedding into n copies of C^N; a is the first tensor slot of op.
template <class T>
Matrix<T> embed_two_leg(const Matrix<T>& op, std::size_t a, std::size_t b, std::size_t n) {
    std::size_t d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(op.rows()))));
    if (d * d != op.rows()) throw Error(ErrorKind::DimensionMismatch, "two-leg operator must be N^2 x N^2");
    if (a >= n || b >= n || a == b) throw Error(ErrorKind::IndexOutOfRange, "bad leg pair");
    return embed(op, {a, b}, LegLayout::uniform(d, n));
}

/// Flip P on C^N ⊗ C^N.
Matrix<Rational> flip(std::size_t N);
/// Q = sum_{ij} e^t_{ij} ⊗ e_{ji}; Q[(x,y),(x',y')] = g[x,y] g^{-1}[y',x'].
Matrix<Rational> q_operator(const GForm& form);

struct StructuralOps {
    Matrix<Rational> P, Q;
};
StructuralOps structural_ops(const GForm& form);

/// Matrix permuting tensor legs: the vector in slot k is moved to slot perm[k]. Homomorphic:
/// permutation_op(p ∘ q) = permutation_op(p) · permutation_op(q) where (p ∘ q)[k] = p[q[k]].
Matrix<Rational> permutation_op(const std::vector<std::size_t>& perm, std::size_t N);
/// Leg reversal k -> n-1-k.
Matrix<Rational> reversal_op(std::size_t n, std::size_t N);

/// Applies x -> g x^T g^{-1} on the selected legs of an operator on (C^N)^{⊗n}.
template <class T>
Matrix<T> transpose_legs(const Matrix<T>& a, const std::set<std::size_t>& legs, const GForm& form) {
    const std::size_t N = form.N();
    std::size_t n = 0, total = 1;
    while (total < a.rows()) {
        total *= N;
        ++n;
    }
    if (total != a.rows() || !a.square()) throw Error(ErrorKind::DimensionMismatch, "operator is not on (C^N)^n");
    if (legs.empty()) return a;
    LegLayout layout = LegLayout::uniform(N, n);
    // Partial transpose: swap row and column digits on the selected legs.
    Matrix<T> pt(a.rows(), a.cols());
    for (std::size_t r = 0; r < total; ++r)
        for (std::size_t c = 0; c < total; ++c) {
            std::size_t r2 = r, c2 = c;
            for (std::size_t l : legs) {
                if (l >= n) throw Error(ErrorKind::IndexOutOfRange, "leg index out of range");
                std::size_t dr = layout.digit(r, l), dc = layout.digit(c, l), s = layout.stride(l);
                r2 = r2 - dr * s + dc * s;
                c2 = c2 - dc * s + dr * s;
            }
            pt(r2, c2) = a(r, c);
        }
    // Conjugate by g on each selected leg.
    auto lift = [](const Matrix<Rational>& m) { return m.template map<T>([](const Rational& x) { return T(x); }); };
    Matrix<T> g = lift(form.g()), ginv = lift(form.g_inverse());
    for (std::size_t l : legs) {
        pt = apply_on_legs(g, {l}, layout, pt);
        pt = apply_on_legs(ginv.transpose(), {l}, layout, pt.transpose()).transpose();
    }
    return pt;
}

/// The Z-endomorphism Tr_W((A ⊗ 1) M) for M on W ⊗ Z with dim W = dimW.
template <class T>
Matrix<T> contract_first(const Matrix<T>& a, const Matrix<T>& m, std::size_t dimW) {
    if (!m.square() || dimW == 0 || m.rows() % dimW != 0 || a.rows() != dimW || !a.square())
        throw Error(ErrorKind::DimensionMismatch, "contract_first");
    const std::size_t dz = m.rows() / dimW;
    Matrix<T> out(dz, dz);
    for (std::size_t i = 0; i < dimW; ++i)
        for (std::size_t j = 0; j < dimW; ++j) {
            const T& aij = a(i, j);
            if (is_zero(aij)) continue;
            // (A ⊗ 1)M has W-block (i, i') = sum_j A_ij M_(j, i'); trace picks i' = i.
            for (std::size_t z = 0; z < dz; ++z)
                for (std::size_t w = 0; w < dz; ++w) out(z, w) += aij * m(j * dz + z, i * dz + w);
        }
    return out;
}

/// Tr_W(M) for M on W ⊗ Z.
template <class T>
Matrix<T> partial_trace_first(const Matrix<T>& m, std::size_t dimW) {
    return contract_first(Matrix<T>::identity(dimW), m, dimW);
}

/// Matrix of the linear map A -> Tr_W((A ⊗ 1) M), End(W) -> End(Z), with A and the result
/// vectorized row-major. Column (a, b) is the image of E_ab.
template <class T>
Matrix<T> contraction_map(const Matrix<T>& m, std::size_t dimW) {
    if (!m.square() || dimW == 0 || m.rows() % dimW != 0) throw Error(ErrorKind::DimensionMismatch, "contraction_map");
    const std::size_t dz = m.rows() / dimW;
    Matrix<T> phi(dz * dz, dimW * dimW);
    // Tr_W((E_ab ⊗ 1) M) = block M_(b, a).
    for (std::size_t a = 0; a < dimW; ++a)
        for (std::size_t b = 0; b < dimW; ++b)
            for (std::size_t z = 0; z < dz; ++z)
                for (std::size_t w = 0; w < dz; ++w) phi(z * dz + w, a * dimW + b) = m(b * dz + z, a * dz + w);
    return phi;
}

/// A subspace given by linearly independent columns, with a fixed set of rows on which the
/// basis is invertible (used to read off coordinates).
template <class T>
class Basis {
   public:
    Basis() = default;
    /// Columns must be independent; throws DimensionMismatch otherwise.
    explicit Basis(Matrix<T> vectors) : v_(std::move(vectors)) {
        coord_rows_ = pivot_columns(v_.transpose());
        if (coord_rows_.size() != v_.cols()) throw Error(ErrorKind::DimensionMismatch, "basis vectors are dependent");
        Matrix<T> sq(v_.cols(), v_.cols());
        for (std::size_t i = 0; i < coord_rows_.size(); ++i)
            for (std::size_t j = 0; j < v_.cols(); ++j) sq(i, j) = v_(coord_rows_[i], j);
        coord_inv_ = v_.cols() ? inverse(sq) : Matrix<T>();
    }

    std::size_t size() const noexcept { return v_.cols(); }
    std::size_t ambient() const noexcept { return v_.rows(); }
    const Matrix<T>& vectors() const noexcept { return v_; }

    /// Coordinates of the columns of x; throws NotInvariant if some column leaves the span.
    Matrix<T> coordinates(const Matrix<T>& x) const {
        if (x.rows() != ambient()) throw Error(ErrorKind::DimensionMismatch, "coordinates: ambient mismatch");
        if (size() == 0) {
            if (!x.is_zero()) throw Error(ErrorKind::NotInvariant, "vector outside the zero subspace");
            return Matrix<T>(0, x.cols());
        }
        Matrix<T> xr(size(), x.cols());
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) xr(i, j) = x(coord_rows_[i], j);
        Matrix<T> c = coord_inv_ * xr;
        if (!(v_ * c == x)) throw Error(ErrorKind::NotInvariant, "image leaves the codomain span");
        return c;
    }

    template <class U>
    Basis<U> convert() const {
        return Basis<U>(v_.template map<U>([](const T& x) { return U(x); }));
    }

   private:
    Matrix<T> v_;
    std::vector<std::size_t> coord_rows_;
    Matrix<T> coord_inv_;
};

/// Column-space basis chosen at the leftmost pivot columns.
template <class T>
Basis<T> image_basis(const Matrix<T>& a) {
    return Basis<T>(column_space_basis(a));
}

/// Matrix of A in the given bases; throws NotInvariant if A(domain) leaves span(codomain).
template <class T>
Matrix<T> restrict_op(const Matrix<T>& a, const Basis<T>& domain, const Basis<T>& codomain) {
    return codomain.coordinates(a * domain.vectors());
}

/// Kronecker basis of a tensor product of subspaces.
template <class T>
Basis<T> tensor_basis(const std::vector<const Basis<T>*>& parts) {
    Matrix<T> v = Matrix<T>::identity(1);
    for (const auto* p : parts) v = kron(v, p->vectors());
    return Basis<T>(std::move(v));
}

}  // namespace twyang
