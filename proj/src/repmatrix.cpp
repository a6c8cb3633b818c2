#include "twyang/repmatrix.hpp"

#include <set>
#include <sstream>

#include "twyang/error.hpp"
#include "twyang/series.hpp"

namespace twyang {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Matrix<Rational> kron_all(const std::vector<const Matrix<Rational>*>& parts) {
    Matrix<Rational> v = Matrix<Rational>::identity(1);
    for (const auto* p : parts) v = kron(v, *p);
    return v;
}

/// Product of the listed two-superleg series factors in the listed order, as a series on `layout`.
MatSeries<Rational> ordered_product(const LegLayout& layout,
                                    const std::vector<std::pair<MatSeries<Rational>, std::vector<std::size_t>>>& factors,
                                    int rel_prec) {
    auto m = MatSeries<Rational>::constant(Matrix<Rational>::identity(layout.total()), rel_prec);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        left_mul_series(m, it->first, select_legs(layout, it->second));
    return m;
}

struct BoxTerm {
    Series<Rational> alpha, beta;
    bool uses_q = false;
};

/// One box-level factor as alpha + beta X for the parameter sum/difference d0 + d1 ζ.
BoxTerm box_term(RKind kind, const Rational& diff0, const Rational& diff1, const Rational& sum0, const Rational& sum1,
                 int rel_prec) {
    BoxTerm t;
    switch (kind) {
        case RKind::R:
            t.alpha = Series<Rational>::linear(diff0, diff1, rel_prec);
            t.beta = Series<Rational>::constant(Rational(-1), rel_prec);
            break;
        case RKind::RPrime:
            t.alpha = Series<Rational>::linear(-sum0, -sum1, rel_prec);
            t.beta = Series<Rational>::constant(Rational(-1), rel_prec);
            t.uses_q = true;
            break;
        case RKind::RBreve: {
            if (diff0.is_zero() && diff1.is_zero())
                throw Error(ErrorKind::SingularParameter, "R̆(u, v) with u = v identically");
            int start = diff0.is_zero() ? -1 : 0;
            t.beta = Series<Rational>::inverse_linear(diff0, diff1, start + rel_prec).scaled(Rational(-1));
            t.alpha = Series<Rational>::constant(Rational(1), start + rel_prec);
            break;
        }
        case RKind::RBrevePrime: {
            if (sum0.is_zero() && sum1.is_zero())
                throw Error(ErrorKind::SingularParameter, "R̆'(u, v) with u = -v identically");
            int start = sum0.is_zero() ? -1 : 0;
            t.beta = Series<Rational>::inverse_linear(sum0, sum1, start + rel_prec);
            t.alpha = Series<Rational>::constant(Rational(1), start + rel_prec);
            t.uses_q = true;
            break;
        }
    }
    return t;
}

bool descending_inner(RKind kind) { return kind == RKind::RPrime || kind == RKind::RBrevePrime; }

std::vector<std::pair<std::size_t, std::size_t>> block_pairs(RKind kind, std::size_t m, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = m; p-- > 0;) {
        if (descending_inner(kind))
            for (std::size_t q = n; q-- > 0;) out.emplace_back(p, q);
        else
            for (std::size_t q = 0; q < n; ++q) out.emplace_back(p, q);
    }
    return out;
}

Matrix<Rational> aux_factor_chain(const GForm& form, const std::vector<Rational>& v, const Rational& u, bool primed) {
    // primed: R̆'_0n ··· R̆'_01 ; otherwise R̆_01 ··· R̆_0n.
    const std::size_t N = form.N(), n = v.size();
    LegLayout layout = LegLayout::uniform(N, n + 1);
    const Matrix<Rational> X = primed ? q_operator(form) : flip(N);
    Matrix<Rational> m = Matrix<Rational>::identity(layout.total());
    for (std::size_t k = 0; k < n; ++k) {
        // Factors are applied on the left, so iterate from the rightmost one.
        std::size_t q = primed ? k : n - 1 - k;
        Rational d = primed ? u + v[q] : u - v[q];
        if (d.is_zero())
            throw Error(ErrorKind::SingularParameter, std::string(primed ? "R̆'" : "R̆") + "(u, v) singular at u = " +
                                                          u.str() + " for box parameter " + v[q].str());
        Matrix<Rational> xm = apply_on_legs(X, {0, q + 1}, layout, m);
        xm *= primed ? Rational(1) / d : Rational(-1) / d;
        m += xm;
    }
    return m;
}

std::vector<Rational> box_parameters(const ModuleFactor& f) {
    auto t = column_tableau(f.diagram);
    std::vector<Rational> v;
    for (int c : t.contents) v.push_back(f.z + Rational(c));
    return v;
}

Basis<Rational> aux_basis(std::size_t N, const Basis<Rational>& b) {
    return Basis<Rational>(kron(Matrix<Rational>::identity(N), b.vectors()));
}

}  // namespace

// ---------------------------------------------------------------------------------------------

FusedModuleSpec::FusedModuleSpec(GForm form, std::vector<ModuleFactor> factors, int box_cap)
    : form_(std::move(form)), factors_(std::move(factors)), box_cap_(box_cap) {
    for (const auto& f : factors_) {
        boxes_ += f.diagram.size();
        fusion_.push_back(fusion_operator(f.diagram, N(), {}, box_cap));
    }
    if (static_cast<int>(boxes_) > box_cap)
        throw Error(ErrorKind::BoxCapExceeded,
                    "module has " + std::to_string(boxes_) + " boxes, cap is " + std::to_string(box_cap));
}

FusedModuleSpec FusedModuleSpec::parse(const std::string& modules, GForm form, int box_cap) {
    std::vector<ModuleFactor> factors;
    std::string text = trim(modules);
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ';')) {
            item = trim(item);
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw Error(ErrorKind::ParseError, "module factor '" + item + "' lacks ':z'");
            factors.push_back({SkewDiagram::parse(trim(item.substr(0, colon))), Rational::parse(trim(item.substr(colon + 1)))});
        }
        if (text.back() == ';') throw Error(ErrorKind::ParseError, "trailing ';' in module spec");
    }
    return FusedModuleSpec(std::move(form), std::move(factors), box_cap);
}

std::string FusedModuleSpec::str() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        s += (i ? ";" : "") + factors_[i].diagram.str() + ":" + factors_[i].z.str();
    return s;
}

std::vector<std::size_t> FusedModuleSpec::dims() const {
    std::vector<std::size_t> d;
    for (const auto& f : fusion_) d.push_back(f->dim());
    return d;
}

std::size_t FusedModuleSpec::dim() const {
    std::size_t d = 1;
    for (const auto& f : fusion_) d *= f->dim();
    return d;
}

Basis<Rational> FusedModuleSpec::basis() const {
    std::vector<const Matrix<Rational>*> parts;
    for (const auto& f : fusion_) parts.push_back(&f->basis.vectors());
    return Basis<Rational>(kron_all(parts));
}

FusedModuleSpec FusedModuleSpec::shifted(const Rational& s) const {
    FusedModuleSpec r = *this;
    for (auto& f : r.factors_) f.z += s;
    return r;
}

FusedModuleSpec FusedModuleSpec::with_parameters(const std::vector<Rational>& z) const {
    if (z.size() != factors_.size())
        throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(factors_.size()) + " parameters, got " +
                                                  std::to_string(z.size()));
    FusedModuleSpec r = *this;
    for (std::size_t i = 0; i < z.size(); ++i) r.factors_[i].z = z[i];
    return r;
}

// ---------------------------------------------------------------------------------------------

MatSeries<Rational> block_factor(RKind kind, const GForm& form, const FusionOperator& theta, const Rational& w, int a,
                                 const FusionOperator& omega, const Rational& z, int b, int rel_prec) {
    const std::size_t N = form.N();
    const auto ct = column_tableau(theta.diagram).contents;
    const auto co = column_tableau(omega.diagram).contents;
    const std::size_t m = ct.size(), n = co.size();
    LegLayout layout = LegLayout::uniform(N, m + n);
    const Matrix<Rational> P = flip(N), Q = q_operator(form);
    auto pairs = block_pairs(kind, m, n);

    // All box factors share the relative precision; poles only come from breve kinds.
    auto prod = MatSeries<Rational>::constant(Matrix<Rational>::identity(layout.total()), rel_prec);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        auto [p, q] = *it;
        Rational up = w + Rational(ct[p]), vq = z + Rational(co[q]);
        BoxTerm t;
        try {
            t = box_term(kind, up - vq, Rational(a - b), up + vq, Rational(a + b), rel_prec);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SingularFamily)
                throw Error(ErrorKind::SingularFamily, "box factor denominator vanishes identically in ζ");
            throw;
        }
        left_mul_affine(prod, t.alpha, t.uses_q ? Q : P, select_legs(layout, {p, m + q}), t.beta);
    }
    Basis<Rational> basis(kron(theta.basis.vectors(), omega.basis.vectors()));
    return restrict_series(prod, basis);
}

namespace {

std::vector<std::pair<MatSeries<Rational>, std::vector<std::size_t>>> wz_factors(const FusedModuleSpec& W,
                                                                                  const FusedModuleSpec& Z, RKind kind,
                                                                                  int a, int rel_prec) {
    std::vector<std::pair<MatSeries<Rational>, std::vector<std::size_t>>> out;
    const std::size_t k = W.size(), l = Z.size();
    for (std::size_t i = k; i-- > 0;) {
        auto emit = [&](std::size_t j) {
            out.emplace_back(block_factor(kind, W.form(), W.fusion(i), W.factors()[i].z, a, Z.fusion(j),
                                          Z.factors()[j].z, 0, rel_prec),
                             std::vector<std::size_t>{i, k + j});
        };
        if (descending_inner(kind))
            for (std::size_t j = l; j-- > 0;) emit(j);
        else
            for (std::size_t j = 0; j < l; ++j) emit(j);
    }
    return out;
}

LegLayout wz_layout(const FusedModuleSpec& W, const FusedModuleSpec& Z) {
    auto d = W.dims();
    for (auto x : Z.dims()) d.push_back(x);
    return LegLayout(d);
}

}  // namespace

Matrix<Rational> r_factorized(const FusedModuleSpec& W, const FusedModuleSpec& Z, RKind kind) {
    if (W.N() != Z.N()) throw Error(ErrorKind::DimensionMismatch, "W and Z have different N");
    return ordered_product(wz_layout(W, Z), wz_factors(W, Z, kind, 0, 1), 1).at(0);
}

MatSeries<Rational> r_factorized_family(const FusedModuleSpec& W, const FusedModuleSpec& Z, RKind kind, int rel_prec) {
    if (W.N() != Z.N()) throw Error(ErrorKind::DimensionMismatch, "W and Z have different N");
    return ordered_product(wz_layout(W, Z), wz_factors(W, Z, kind, 1, rel_prec), rel_prec);
}

Matrix<RatFunc> r_factorized_symbolic(const FusedModuleSpec& W, const FusedModuleSpec& Z, RKind kind) {
    const std::size_t N = W.form().N();
    std::vector<std::vector<Rational>> wv, zv;
    std::vector<std::size_t> woff, zoff;
    std::size_t legs = 0;
    for (const auto& f : W.factors()) {
        woff.push_back(legs);
        wv.push_back(box_parameters(f));
        legs += f.diagram.size();
    }
    for (const auto& f : Z.factors()) {
        zoff.push_back(legs);
        zv.push_back(box_parameters(f));
        legs += f.diagram.size();
    }
    LegLayout layout = LegLayout::uniform(N, legs);
    auto lift = [](const Matrix<Rational>& m) { return m.map<RatFunc>([](const Rational& x) { return RatFunc(x); }); };
    const Matrix<RatFunc> P = lift(flip(N)), Q = lift(q_operator(W.form()));
    const RatFunc zeta = RatFunc::x();
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(layout.total());
    // Same block and box order as the series route, applied from the right end.
    std::vector<std::tuple<std::size_t, std::size_t, RatFunc, RatFunc>> factors;  // legs, alpha, beta
    const std::size_t k = W.size(), l = Z.size();
    for (std::size_t i = k; i-- > 0;) {
        std::vector<std::size_t> js;
        if (descending_inner(kind))
            for (std::size_t j = l; j-- > 0;) js.push_back(j);
        else
            for (std::size_t j = 0; j < l; ++j) js.push_back(j);
        for (std::size_t j : js)
            for (auto [p, q] : block_pairs(kind, wv[i].size(), zv[j].size())) {
                RatFunc u = RatFunc(wv[i][p]) + zeta, v = RatFunc(zv[j][q]);
                RatFunc alpha, beta;
                switch (kind) {
                    case RKind::R: alpha = u - v; beta = RatFunc(-1); break;
                    case RKind::RPrime: alpha = RatFunc(0) - (u + v); beta = RatFunc(-1); break;
                    case RKind::RBreve: alpha = RatFunc(1); beta = RatFunc(-1) / (u - v); break;
                    case RKind::RBrevePrime: alpha = RatFunc(1); beta = RatFunc(1) / (u + v); break;
                }
                factors.emplace_back(woff[i] + p, zoff[j] + q, alpha, beta);
            }
    }
    const bool uses_q = descending_inner(kind);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        auto& [lp, lq, alpha, beta] = *it;
        Matrix<RatFunc> xm = apply_on_legs(uses_q ? Q : P, {lp, lq}, layout, m);
        m = m * alpha + xm * beta;
    }
    Basis<Rational> bw = W.basis(), bz = Z.basis();
    Basis<RatFunc> b(lift(kron(bw.vectors(), bz.vectors())));
    return restrict_op(m, b, b);
}

// ---------------------------------------------------------------------------------------------

MatSeries<Rational> s_elementary_family(const FusionOperator& f, const GForm& form, const Rational& z, int rel_prec) {
    const std::size_t N = form.N();
    const auto c = column_tableau(f.diagram).contents;
    const std::size_t n = c.size();
    LegLayout layout = LegLayout::uniform(N, n);
    const Matrix<Rational> Q = q_operator(form);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = n; p-- > 0;)
        for (std::size_t q = p; q-- > 0;) pairs.emplace_back(p, q);
    auto prod = MatSeries<Rational>::constant(Matrix<Rational>::identity(layout.total()), rel_prec);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        auto [p, q] = *it;
        Rational s0 = z + z + Rational(c[p] + c[q]);
        auto t = box_term(RKind::RPrime, 0, 0, s0, Rational(2), rel_prec);
        left_mul_affine(prod, t.alpha, Q, select_legs(layout, {p, q}), t.beta);
    }
    return restrict_series(prod, f.basis);
}

Matrix<Rational> s_elementary(const SkewDiagram& omega, const Rational& z, const GForm& form) {
    auto f = fusion_operator(omega, static_cast<int>(form.N()));
    return s_elementary_family(*f, form, z, 1).at(0);
}

MatSeries<Rational> s_fused_family(const FusedModuleSpec& Z, int rel_prec) {
    LegLayout layout(Z.dims());
    std::vector<std::pair<MatSeries<Rational>, std::vector<std::size_t>>> factors;
    for (std::size_t i = Z.size(); i-- > 0;) {
        factors.emplace_back(s_elementary_family(Z.fusion(i), Z.form(), Z.factors()[i].z, rel_prec),
                             std::vector<std::size_t>{i});
        for (std::size_t j = i; j-- > 0;)
            factors.emplace_back(block_factor(RKind::RPrime, Z.form(), Z.fusion(i), Z.factors()[i].z, 1, Z.fusion(j),
                                              Z.factors()[j].z, 1, rel_prec),
                                 std::vector<std::size_t>{i, j});
    }
    return ordered_product(layout, factors, rel_prec);
}

Matrix<Rational> s_fused(const FusedModuleSpec& Z) { return s_fused_family(Z, 1).at(0); }

// ---------------------------------------------------------------------------------------------

namespace {

LegLayout aux_layout(const FusedModuleSpec& Z) {
    std::vector<std::size_t> d{Z.form().N()};
    for (auto x : Z.dims()) d.push_back(x);
    return LegLayout(d);
}

Matrix<Rational> aux_action(const FusedModuleSpec& Z, const Rational& u, bool primed) {
    const std::size_t N = Z.form().N();
    LegLayout layout = aux_layout(Z);
    std::vector<Matrix<Rational>> blocks;
    for (std::size_t j = 0; j < Z.size(); ++j) {
        Matrix<Rational> full = aux_factor_chain(Z.form(), box_parameters(Z.factors()[j]), u, primed);
        Basis<Rational> b = aux_basis(N, Z.fusion(j).basis);
        blocks.push_back(restrict_op(full, b, b));
    }
    // T = T_1 ··· T_ℓ, T^t(-u) = T'_ℓ ··· T'_1; both built by left multiplication.
    Matrix<Rational> m = Matrix<Rational>::identity(layout.total());
    for (std::size_t k = 0; k < Z.size(); ++k) {
        std::size_t j = primed ? k : Z.size() - 1 - k;
        m = apply_on_legs(blocks[j], {0, j + 1}, layout, m);
    }
    return m;
}

MatSeries<Rational> aux_series(const FusedModuleSpec& Z, int K, bool primed) {
    LegLayout layout = aux_layout(Z);
    auto blocks = aux_block_series(Z, K, primed);
    auto m = MatSeries<Rational>::constant(Matrix<Rational>::identity(layout.total()), K + 1);
    for (std::size_t k = 0; k < Z.size(); ++k) {
        std::size_t j = primed ? k : Z.size() - 1 - k;
        left_mul_series(m, blocks[j], select_legs(layout, {0, j + 1}));
    }
    return m;
}

}  // namespace

std::vector<MatSeries<Rational>> aux_block_series(const FusedModuleSpec& Z, int K, bool primed) {
    const std::size_t N = Z.form().N();
    const Matrix<Rational> P = flip(N), Q = q_operator(Z.form());
    const int prec = K + 1;
    std::vector<MatSeries<Rational>> blocks;
    for (std::size_t j = 0; j < Z.size(); ++j) {
        auto v = box_parameters(Z.factors()[j]);
        const std::size_t n = v.size();
        LegLayout full = LegLayout::uniform(N, n + 1);
        auto m = MatSeries<Rational>::constant(Matrix<Rational>::identity(full.total()), prec);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t q = primed ? k : n - 1 - k;
            // 1 - P x / (1 - v x) and 1 + Q x / (1 + v x) in x = 1/u.
            auto x = Series<Rational>::linear(Rational(0), Rational(primed ? 1 : -1), prec);
            auto f = x * Series<Rational>::inverse_linear(Rational(1), primed ? v[q] : -v[q], prec);
            left_mul_elementary(m, primed ? Q : P, select_legs(full, {0, q + 1}), f);
        }
        blocks.push_back(restrict_series(m, aux_basis(N, Z.fusion(j).basis)));
    }
    return blocks;
}

Matrix<Rational> t_action(const FusedModuleSpec& Z, const Rational& u) { return aux_action(Z, u, false); }

Matrix<Rational> t_transposed_action(const FusedModuleSpec& Z, const Rational& u) { return aux_action(Z, u, true); }

Matrix<Rational> s_action(const FusedModuleSpec& Z, const Rational& u) {
    return t_transposed_action(Z, u) * t_action(Z, u);
}

Matrix<RatFunc> t_action_symbolic(const FusedModuleSpec& Z) {
    const std::size_t N = Z.form().N();
    LegLayout layout = aux_layout(Z);
    auto lift = [](const Matrix<Rational>& m) { return m.map<RatFunc>([](const Rational& x) { return RatFunc(x); }); };
    const Matrix<RatFunc> P = lift(flip(N));
    const RatFunc u = RatFunc::x();
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(layout.total());
    for (std::size_t jj = Z.size(); jj-- > 0;) {
        auto v = box_parameters(Z.factors()[jj]);
        LegLayout full = LegLayout::uniform(N, v.size() + 1);
        Matrix<RatFunc> blk = Matrix<RatFunc>::identity(full.total());
        for (std::size_t q = v.size(); q-- > 0;) {
            Matrix<RatFunc> xm = apply_on_legs(P, {0, q + 1}, full, blk);
            blk = blk - xm * (RatFunc(1) / (u - RatFunc(v[q])));
        }
        Basis<RatFunc> b(lift(aux_basis(N, Z.fusion(jj).basis).vectors()));
        m = apply_on_legs(restrict_op(blk, b, b), {0, jj + 1}, layout, m);
    }
    return m;
}

MatSeries<Rational> t_series_at_infinity(const FusedModuleSpec& Z, int K) { return aux_series(Z, K, false); }

MatSeries<Rational> s_series_at_infinity(const FusedModuleSpec& Z, int K) {
    return aux_series(Z, K, true) * aux_series(Z, K, false);
}

GeneratorMatrices s_generators(const FusedModuleSpec& Z, int K) {
    if (K < 1) throw Error(ErrorKind::IndexOutOfRange, "K must be at least 1");
    const std::size_t N = Z.form().N();
    auto s = s_series_at_infinity(Z, K);
    GeneratorMatrices g;
    g.K = K;
    g.S.resize(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        g.S[k].resize(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) g.S[k][i].push_back(aux_block(s.at(k), N, i, j));
    }
    return g;
}

// ---------------------------------------------------------------------------------------------

std::vector<SuperlegFactor> s_wz_factors(const FusedModuleSpec& Z, int rel_prec) {
    const std::size_t l = Z.size();
    const GForm& form = Z.form();
    std::vector<SuperlegFactor> out;
    auto block = [&](RKind kind, std::size_t i, std::size_t j) {
        out.push_back({block_factor(kind, form, Z.fusion(i), Z.factors()[i].z, 1, Z.fusion(j), Z.factors()[j].z, 0,
                                    rel_prec),
                       {i, l + j}});
    };
    for (std::size_t i = l; i-- > 0;)
        for (std::size_t j = l; j-- > 0;) block(RKind::RBrevePrime, i, j);
    for (std::size_t i = l; i-- > 0;) {
        out.push_back({s_elementary_family(Z.fusion(i), form, Z.factors()[i].z, rel_prec), {i}});
        for (std::size_t j = i; j-- > 0;)
            out.push_back({block_factor(RKind::RPrime, form, Z.fusion(i), Z.factors()[i].z, 1, Z.fusion(j),
                                        Z.factors()[j].z, 1, rel_prec),
                           {i, j}});
    }
    for (std::size_t i = l; i-- > 0;)
        for (std::size_t j = 0; j < l; ++j) block(RKind::RBreve, i, j);
    return out;
}

MatSeries<Rational> s_wz_family(const FusedModuleSpec& Z, int rel_prec) {
    auto d = Z.dims();
    auto dz = Z.dims();
    d.insert(d.end(), dz.begin(), dz.end());
    LegLayout layout(d);
    auto factors = s_wz_factors(Z, rel_prec);
    auto m = MatSeries<Rational>::constant(Matrix<Rational>::identity(layout.total()), rel_prec);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) left_mul_series(m, it->op, select_legs(layout, it->legs));
    return m;
}

RelationReport check_defining_relations(const FusedModuleSpec& Z, const std::vector<std::pair<Rational, Rational>>& samples) {
    const std::size_t N = Z.form().N(), n = Z.boxes();
    RelationReport rep;
    rep.degree_bound = 2 * n + 2;
    std::vector<std::pair<Rational, Rational>> pts = samples;
    if (pts.empty()) {
        std::set<Rational> poles;
        for (const auto& f : Z.factors())
            for (const auto& v : box_parameters(f)) {
                poles.insert(v);
                poles.insert(-v);
            }
        for (int k = 1; pts.size() < rep.degree_bound + 1; ++k) {
            Rational u(2 * k + 1, 7), v(-3 * k + 1, 5);
            if (poles.count(u) || poles.count(v) || u == v || u == -v) continue;
            pts.emplace_back(u, v);
        }
    }
    const std::size_t dz = Z.dim();
    LegLayout layout({N, N, dz});
    auto eye = Matrix<Rational>::identity(layout.total());
    std::size_t rtt_ok = 0, refl_ok = 0;
    for (const auto& [u, v] : pts) {
        RelationSample s;
        s.u = u;
        s.v = v;
        try {
            Matrix<Rational> tu = t_action(Z, u), tv = t_action(Z, v);
            Matrix<Rational> su = s_action(Z, u), sv = s_action(Z, v);
            Matrix<Rational> R = yang_R(Z.form(), u, v), Rp = yang_R_prime(Z.form(), u, v);
            auto L = [&](const Matrix<Rational>& op, std::vector<std::size_t> legs, const Matrix<Rational>& x) {
                return apply_on_legs(op, legs, layout, x);
            };
            // R12 T1(u) T2(v) = T2(v) T1(u) R12
            Matrix<Rational> lhs = L(R, {0, 1}, L(tu, {0, 2}, L(tv, {1, 2}, eye)));
            Matrix<Rational> rhs = L(tv, {1, 2}, L(tu, {0, 2}, L(R, {0, 1}, eye)));
            s.rtt = lhs == rhs;
            // R12 S1(u) R'12 S2(v) = S2(v) R'12 S1(u) R12
            lhs = L(R, {0, 1}, L(su, {0, 2}, L(Rp, {0, 1}, L(sv, {1, 2}, eye))));
            rhs = L(sv, {1, 2}, L(Rp, {0, 1}, L(su, {0, 2}, L(R, {0, 1}, eye))));
            s.reflection = lhs == rhs;
            ++rep.evaluated;
            rtt_ok += s.rtt;
            refl_ok += s.reflection;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularParameter) throw;
            s.singular = true;
            s.error = e.what();
        }
        rep.samples.push_back(std::move(s));
    }
    const bool enough = rep.evaluated > rep.degree_bound;
    rep.rtt = enough && rtt_ok == rep.evaluated;
    rep.reflection = enough && refl_ok == rep.evaluated;
    return rep;
}

DualityReport duality_check(const SkewDiagram& omega, const Rational& z, const GForm& form,
                            const std::vector<Rational>& u_samples) {
    const int N = static_cast<int>(form.N());
    auto f = fusion_operator(omega, N);
    auto sh = sharp(omega);
    auto fs = fusion_operator(sh.diagram, N);
    const auto c = column_tableau(omega).contents;
    const auto cs = column_tableau(sh.diagram).contents;
    const std::size_t n = c.size();
    const Rational zs = -z - Rational(sh.c);
    std::vector<Rational> v(n), vs(n);
    for (std::size_t p = 0; p < n; ++p) {
        v[p] = z + Rational(c[p]);
        vs[p] = zs + Rational(cs[p]);
    }
    std::vector<Rational> us = u_samples;
    if (us.empty()) {
        std::set<Rational> poles;
        for (std::size_t p = 0; p < n; ++p) {
            poles.insert(v[p]);
            poles.insert(-v[p]);
            poles.insert(vs[p]);
        }
        for (int k = 1; us.size() < 2 * n + 2; ++k) {
            Rational u(3 * k + 1, 11);
            if (!poles.count(u)) us.push_back(u);
        }
    }
    // h(w) = R̆_0n(u, w_n) ··· R̆_01(u, w_1) on aux ⊗ (C^N)^{⊗n}.
    std::vector<std::size_t> desc(n);
    for (std::size_t p = 0; p < n; ++p) desc[p] = n - p;
    auto h = [&](const Rational& u, const std::vector<Rational>& w) {
        std::vector<Rational> wd(w.rbegin(), w.rend());
        return aux_chain(N, n, u, wd, desc);
    };
    auto reversed = [](const std::vector<Rational>& w) { return std::vector<Rational>(w.rbegin(), w.rend()); };
    const Matrix<Rational> sigma = kron(Matrix<Rational>::identity(form.N()), reversal_op(n, form.N()));
    const Matrix<Rational> F = kron(Matrix<Rational>::identity(form.N()), f->matrix);
    const Matrix<Rational> Fs = kron(Matrix<Rational>::identity(form.N()), fs->matrix);
    std::set<std::size_t> legs;
    for (std::size_t p = 1; p <= n; ++p) legs.insert(p);
    auto t_legs = [&](const Matrix<Rational>& m) { return transpose_legs(m, legs, form); };

    DualityReport rep;
    for (const auto& u : us) {
        for (const auto& x : vs)
            if (x == u) throw Error(ErrorKind::SingularParameter, "u sample " + u.str() + " is a pole of the ♯ action");
        // ρ♯(h) = σ̂ h(v♯_σ) σ̂
        Matrix<Rational> lhs = sigma * h(u, reversed(vs)) * sigma * Fs;
        // ρ(τh) = σ̂ t(h(-v_σ)) σ̂
        std::vector<Rational> mv;
        for (const auto& x : reversed(v)) mv.push_back(-x);
        Matrix<Rational> rho_tau = sigma * t_legs(h(u, mv)) * sigma;
        Matrix<Rational> rhs = sigma * t_legs(rho_tau * F) * sigma;
        ++rep.samples;
        if (lhs == rhs) ++rep.passed;
    }
    return rep;
}

}  // namespace twyang
