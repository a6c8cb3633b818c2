#include "twyang/tensor.hpp"

#include "twyang/gform.hpp"
#include "twyang/linalg.hpp"

namespace twyang {

std::string to_string(FormKind k) { return k == FormKind::Orthogonal ? "so" : "sp"; }

FormKind parse_form_kind(const std::string& s) {
    if (s == "so" || s == "orthogonal") return FormKind::Orthogonal;
    if (s == "sp" || s == "symplectic") return FormKind::Symplectic;
    throw Error(ErrorKind::InvalidForm, "unknown form kind '" + s + "'");
}

GForm::GForm(FormKind kind, Matrix<Rational> g) : kind_(kind), g_(std::move(g)) {
    if (!g_.square() || g_.rows() == 0) throw Error(ErrorKind::InvalidForm, "g must be a non-empty square matrix");
    if (kind_ == FormKind::Symplectic && g_.rows() % 2 != 0)
        throw Error(ErrorKind::InvalidForm, "symplectic form needs even N");
    Matrix<Rational> gt = g_.transpose();
    bool ok = kind_ == FormKind::Orthogonal ? gt == g_ : gt == g_ * Rational(-1);
    if (!ok) throw Error(ErrorKind::InvalidForm, kind_ == FormKind::Orthogonal ? "g is not symmetric" : "g is not skew");
    if (rank(g_) != g_.rows()) throw Error(ErrorKind::InvalidForm, "g is degenerate");
    ginv_ = inverse(g_);
}

GForm GForm::standard(FormKind kind, std::size_t N) {
    if (N == 0) throw Error(ErrorKind::InvalidForm, "N must be positive");
    if (kind == FormKind::Orthogonal) return GForm(kind, Matrix<Rational>::identity(N));
    if (N % 2 != 0) throw Error(ErrorKind::InvalidForm, "symplectic form needs even N");
    Matrix<Rational> j(N, N);
    const std::size_t h = N / 2;
    for (std::size_t i = 0; i < h; ++i) {
        j(i, i + h) = 1;
        j(i + h, i) = -1;
    }
    return GForm(kind, std::move(j));
}

GForm GForm::custom(FormKind kind, Matrix<Rational> g) { return GForm(kind, std::move(g)); }

Matrix<Rational> GForm::transpose(const Matrix<Rational>& x) const { return g_ * x.transpose() * ginv_; }

LegLayout::LegLayout(std::vector<std::size_t> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
    total_ = 1;
    for (std::size_t l = dims_.size(); l-- > 0;) {
        strides_[l] = total_;
        total_ *= dims_[l];
    }
}

LegSelection select_legs(const LegLayout& layout, const std::vector<std::size_t>& legs) {
    std::vector<bool> chosen(layout.legs(), false);
    for (auto l : legs) {
        if (l >= layout.legs() || chosen[l]) throw Error(ErrorKind::IndexOutOfRange, "bad leg selection");
        chosen[l] = true;
    }
    LegSelection sel;
    sel.op_offsets = {0};
    for (auto l : legs) {
        std::vector<std::size_t> next;
        next.reserve(sel.op_offsets.size() * layout.dim(l));
        for (auto o : sel.op_offsets)
            for (std::size_t d = 0; d < layout.dim(l); ++d) next.push_back(o + d * layout.stride(l));
        sel.op_offsets = std::move(next);
    }
    sel.bases = {0};
    for (std::size_t l = 0; l < layout.legs(); ++l) {
        if (chosen[l]) continue;
        std::vector<std::size_t> next;
        next.reserve(sel.bases.size() * layout.dim(l));
        for (auto o : sel.bases)
            for (std::size_t d = 0; d < layout.dim(l); ++d) next.push_back(o + d * layout.stride(l));
        sel.bases = std::move(next);
    }
    return sel;
}

Matrix<Rational> flip(std::size_t N) {
    Matrix<Rational> p(N * N, N * N);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) p(x * N + y, y * N + x) = 1;
    return p;
}

Matrix<Rational> q_operator(const GForm& form) {
    const std::size_t N = form.N();
    const auto& g = form.g();
    const auto& gi = form.g_inverse();
    Matrix<Rational> q(N * N, N * N);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            if (g(x, y).is_zero()) continue;
            for (std::size_t x2 = 0; x2 < N; ++x2)
                for (std::size_t y2 = 0; y2 < N; ++y2) q(x * N + y, x2 * N + y2) = g(x, y) * gi(y2, x2);
        }
    return q;
}

StructuralOps structural_ops(const GForm& form) { return {flip(form.N()), q_operator(form)}; }

Matrix<Rational> permutation_op(const std::vector<std::size_t>& perm, std::size_t N) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw Error(ErrorKind::IndexOutOfRange, "not a permutation");
        seen[p] = true;
    }
    LegLayout layout = LegLayout::uniform(N, n);
    Matrix<Rational> m(layout.total(), layout.total());
    for (std::size_t src = 0; src < layout.total(); ++src) {
        std::size_t dst = 0;
        for (std::size_t k = 0; k < n; ++k) dst += layout.digit(src, k) * layout.stride(perm[k]);
        m(dst, src) = 1;
    }
    return m;
}

Matrix<Rational> reversal_op(std::size_t n, std::size_t N) {
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = n - 1 - k;
    return permutation_op(perm, N);
}

}  // namespace twyang
