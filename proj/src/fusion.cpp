#include "twyang/fusion.hpp"

#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "twyang/error.hpp"
#include "twyang/matseries.hpp"
#include "twyang/series.hpp"

namespace twyang {

namespace {

std::mutex cache_mutex;
std::map<std::pair<std::string, int>, std::shared_ptr<const FusionOperator>> cache;

Matrix<Rational> fusion_limit(const ColumnTableau& t, int N, const std::vector<int>& slopes) {
    const std::size_t n = t.boxes.size();
    if (n == 0) return Matrix<Rational>::identity(1);
    std::vector<Rational> c(n), s(n);
    for (std::size_t p = 0; p < n; ++p) {
        c[p] = t.contents[p];
        s[p] = slopes[static_cast<std::size_t>(t.boxes[p].second - 1)];
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    int singular = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            pairs.emplace_back(p, q);
            if (c[p] == c[q]) ++singular;
        }
    const int prec = singular + 1;
    LegLayout layout = LegLayout::uniform(static_cast<std::size_t>(N), n);
    const Matrix<Rational> P = flip(static_cast<std::size_t>(N));
    auto m = MatSeries<Rational>::constant(Matrix<Rational>::identity(layout.total()), prec);
    // Left-multiplying in reverse order yields the product in lexicographic order.
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        auto [p, q] = *it;
        auto f = Series<Rational>::inverse_linear(c[p] - c[q], s[p] - s[q], prec).scaled(Rational(-1));
        left_mul_elementary(m, P, select_legs(layout, {p, q}), f);
    }
    for (int k = m.start(); k < 0; ++k)
        if (!m.at(k).is_zero())
            throw Error(ErrorKind::LimitSingular, "fusion product has a pole of order " + std::to_string(-k) + " at ε = 0");
    if (m.prec() < 1) throw Error(ErrorKind::InternalInconsistency, "fusion product lost its constant term");
    return m.at(0);
}

}  // namespace

std::shared_ptr<const FusionOperator> fusion_operator(const SkewDiagram& omega, int N, const std::vector<int>& slopes,
                                                      int box_cap) {
    if (N < 1) throw Error(ErrorKind::DimensionMismatch, "N must be positive");
    if (static_cast<int>(omega.size()) > box_cap)
        throw Error(ErrorKind::BoxCapExceeded, omega.str() + " has more than " + std::to_string(box_cap) + " boxes");
    check_fits(omega, N);
    const int width = omega.lambda().empty() ? 0 : omega.lambda()[0];
    std::vector<int> sl = slopes;
    const bool default_slopes = sl.empty();
    if (default_slopes)
        for (int j = 1; j <= width; ++j) sl.push_back(j);
    if (static_cast<int>(sl.size()) < width) throw Error(ErrorKind::SlopeCollision, "a column has no slope");
    std::set<int> seen;
    for (int v : sl)
        if (v <= 0 || !seen.insert(v).second) throw Error(ErrorKind::SlopeCollision, "slopes must be distinct and positive");

    const auto key = std::make_pair(omega.str(), N);
    if (default_slopes) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto f = std::make_shared<FusionOperator>();
    f->diagram = omega;
    f->N = N;
    f->matrix = fusion_limit(column_tableau(omega), N, sl);
    f->basis = image_basis(f->matrix);
    if (default_slopes) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache[key] = f;
    }
    return f;
}

FusionReport verify_fusion_invariants(const FusionOperator& f, const GForm& form) {
    FusionReport r;
    const std::size_t n = f.diagram.size();
    const auto N = static_cast<std::size_t>(f.N);
    if (form.N() != N) throw Error(ErrorKind::DimensionMismatch, "form and fusion operator disagree on N");
    std::set<std::size_t> all;
    for (std::size_t k = 0; k < n; ++k) all.insert(k);
    r.t_invariant = transpose_legs(f.matrix, all, form) == f.matrix;

    auto sh = sharp(f.diagram);
    auto fs = fusion_operator(sh.diagram, f.N, {}, static_cast<int>(std::max<std::size_t>(n, kDefaultBoxCap)));
    Matrix<Rational> sigma = reversal_op(n, N);
    r.sharp_conjugation = sigma * f.matrix * sigma == fs->matrix;

    const int width = f.diagram.lambda().empty() ? 0 : f.diagram.lambda()[0];
    std::vector<int> reversed;
    for (int j = 1; j <= width; ++j) reversed.push_back(width + 1 - j);
    if (width <= 1) reversed = {2};
    auto alt = fusion_operator(f.diagram, f.N, reversed, static_cast<int>(std::max<std::size_t>(n, kDefaultBoxCap)));
    r.slope_independent = alt->matrix == f.matrix;

    r.dim = f.dim();
    r.ssyt = ssyt_count(f.diagram, f.N);
    r.dimension_matches = r.dim == r.ssyt;
    return r;
}

Matrix<Rational> aux_chain(int N, std::size_t n, const Rational& u, const std::vector<Rational>& v,
                           const std::vector<std::size_t>& legs) {
    LegLayout layout = LegLayout::uniform(static_cast<std::size_t>(N), n + 1);
    const Matrix<Rational> P = flip(static_cast<std::size_t>(N));
    Matrix<Rational> m = Matrix<Rational>::identity(layout.total());
    for (std::size_t k = legs.size(); k-- > 0;) {
        Rational d = u - v[k];
        if (d.is_zero())
            throw Error(ErrorKind::SingularParameter,
                        "R̆(u, v) with u = v = " + u.str() + " on leg " + std::to_string(legs[k]));
        Matrix<Rational> pm = apply_on_legs(P, {0, legs[k]}, layout, m);
        pm *= Rational(-1) / d;
        m += pm;
    }
    return m;
}

IntertwiningReport intertwining_check(const SkewDiagram& omega, int N, const Rational& z,
                                      const std::vector<Rational>& u_samples) {
    auto f = fusion_operator(omega, N);
    auto t = column_tableau(omega);
    const std::size_t n = t.boxes.size();
    std::vector<Rational> v(n);
    for (std::size_t p = 0; p < n; ++p) v[p] = z + Rational(t.contents[p]);
    std::vector<Rational> us = u_samples;
    if (us.empty()) {
        for (int k = 0; us.size() < 2 * n + 2; ++k) {
            Rational u = z + Rational(2 * k + 1, 3);
            bool pole = false;
            for (const auto& x : v) pole = pole || x == u;
            if (!pole) us.push_back(u);
        }
    }
    std::vector<std::size_t> asc(n), desc(n);
    std::vector<Rational> vdesc(v.rbegin(), v.rend());
    for (std::size_t p = 0; p < n; ++p) {
        asc[p] = p + 1;
        desc[p] = n - p;
    }
    // F acts on legs 1..n as a single block; products with it are applied leg-wise.
    LegLayout layout({static_cast<std::size_t>(N), f->matrix.rows()});
    const Matrix<Rational> ft = f->matrix.transpose();
    IntertwiningReport r;
    for (const auto& u : us) {
        Matrix<Rational> ta = aux_chain(N, n, u, v, asc);
        Matrix<Rational> td = aux_chain(N, n, u, vdesc, desc);
        ++r.samples;
        Matrix<Rational> lhs = apply_on_legs(f->matrix, {1}, layout, td);
        Matrix<Rational> rhs = apply_on_legs(ft, {1}, layout, ta.transpose()).transpose();
        if (lhs == rhs) ++r.passed;
    }
    return r;
}

}  // namespace twyang
