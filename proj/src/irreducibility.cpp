#include "twyang/irreducibility.hpp"

#include <random>

#include "twyang/error.hpp"
#include "twyang/linalg.hpp"
#include "twyang/tensor.hpp"

namespace twyang {

// ---------------------------------------------------------------------------------------------
// Walls

std::string WallConstraint::str() const {
    const std::string a = "z" + std::to_string(i + 1), b = "z" + std::to_string(j + 1);
    switch (kind) {
        case WallKind::Single: return a + " in 1/2Z";
        case WallKind::Difference: return a + " - " + b + " in Z";
        case WallKind::Sum: return a + " + " + b + " in Z";
    }
    return {};
}

bool WallSet::on_wall() const {
    for (const auto& c : constraints)
        if (c.violated) return true;
    return false;
}

std::vector<std::string> WallSet::violated() const {
    std::vector<std::string> out;
    for (const auto& c : constraints)
        if (c.violated) out.push_back(c.str());
    return out;
}

namespace {

WallSet walls_of(const std::vector<Rational>& z) {
    WallSet w;
    for (std::size_t i = 0; i < z.size(); ++i) w.constraints.push_back({WallKind::Single, i, i, (z[i] + z[i]).is_integer()});
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            w.constraints.push_back({WallKind::Difference, i, j, (z[i] - z[j]).is_integer()});
            w.constraints.push_back({WallKind::Sum, i, j, (z[i] + z[j]).is_integer()});
        }
    return w;
}

}  // namespace

WallSet walls(const FusedModuleSpec& Z) {
    std::vector<Rational> z;
    for (const auto& f : Z.factors()) z.push_back(f.z);
    return walls_of(z);
}

bool on_wall(const std::vector<Rational>& z) { return walls_of(z).on_wall(); }

std::vector<std::vector<Rational>> off_wall_points(std::size_t ell, std::size_t count, std::uint64_t seed) {
    static const std::vector<long> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    if (ell > primes.size()) throw Error(ErrorKind::IndexOutOfRange, "too many factors for off-wall sampling");
    // Raw engine output only, so the sequence is identical across standard libraries.
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> out;
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<long> pool = primes;
        std::vector<Rational> z;
        for (std::size_t i = 0; i < ell; ++i) {
            std::size_t k = i + static_cast<std::size_t>(rng() % (pool.size() - i));
            std::swap(pool[i], pool[k]);
            const long p = pool[i];
            long a;
            do a = static_cast<long>(rng() % static_cast<std::uint64_t>(6 * p + 1)) - 3 * p;
            while (a % p == 0);
            z.emplace_back(a, p);
        }
        out.push_back(std::move(z));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Φ₀

namespace {

template <class T>
Matrix<T> lift(const Matrix<Rational>& m) {
    return m.map<T>([](const Rational& x) { return T(x); });
}

template <class T>
MatSeries<T> lift(const MatSeries<Rational>& m) {
    return m.template convert<T>();
}

}  // namespace

template <class T>
PhiOperatorT<T> phi_leading(const FusedModuleSpec& Z, int depth) {
    if (Z.size() == 0) return {0, Matrix<T>::identity(1)};
    const std::size_t dz = Z.dim();
    auto d = Z.dims();
    auto dzs = Z.dims();
    d.insert(d.end(), dzs.begin(), dzs.end());
    LegLayout layout(d);
    int max_rel = depth + 1;
    for (int rel = 1;; ++rel) {
        auto factors = s_wz_factors(Z, rel);
        auto m = MatSeries<T>::constant(Matrix<T>::identity(layout.total()), rel);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            left_mul_series(m, lift<T>(it->op), select_legs(layout, it->legs));
        if (rel == 1) max_rel = -m.start() + depth + 1;
        const int r = m.order();
        if (r < m.prec()) {
            for (int k = r; k < m.prec() && k <= r + depth; ++k) {
                Matrix<T> phi = contraction_map(m.at(k), dz);
                if (!phi.is_zero()) return {k, std::move(phi)};
            }
            if (r + depth < m.prec())
                throw Error(ErrorKind::ExhaustedDepth, "contraction vanishes on orders " + std::to_string(r) + ".." +
                                                           std::to_string(r + depth));
        }
        if (rel >= max_rel)
            throw Error(ErrorKind::ExhaustedDepth, "no nonzero contracted coefficient up to order " +
                                                       std::to_string(m.prec() - 1));
    }
}

template <class T>
std::size_t fast_rank(Matrix<T> a) {
    std::size_t r = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const T inv = T(1) / a(r, c);
        const T* prow = a.row(r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(a(i, c))) continue;
            const T f = a(i, c) * inv;
            T* irow = a.row(i);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(prow[j])) irow[j] -= f * prow[j];
        }
        ++r;
    }
    return r;
}

template <>
std::size_t fast_rank(Matrix<Rational> a) {
    return rank(a);
}

template <class T>
Surjectivity surjectivity(const PhiOperatorT<T>& phi) {
    Surjectivity s;
    s.rank = fast_rank(phi.map);
    s.surjective = s.rank == phi.map.rows();
    return s;
}

// ---------------------------------------------------------------------------------------------
// Commutant

template <class T>
std::vector<std::vector<std::vector<Matrix<T>>>> generator_matrices(const FusedModuleSpec& Z, int K) {
    const std::size_t N = Z.form().N();
    std::vector<std::size_t> d{N};
    for (auto x : Z.dims()) d.push_back(x);
    LegLayout layout(d);
    auto assemble = [&](bool primed) {
        auto blocks = aux_block_series(Z, K, primed);
        auto m = MatSeries<T>::constant(Matrix<T>::identity(layout.total()), K + 1);
        for (std::size_t k = 0; k < Z.size(); ++k) {
            std::size_t j = primed ? k : Z.size() - 1 - k;
            left_mul_series(m, lift<T>(blocks[j]), select_legs(layout, {0, j + 1}));
        }
        return m;
    };
    auto s = assemble(true) * assemble(false);
    std::vector<std::vector<std::vector<Matrix<T>>>> g(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        g[k].resize(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) g[k][i].push_back(aux_block(s.at(k), N, i, j));
    }
    return g;
}

namespace {

/// Span of candidate endomorphisms, cut down by commutation constraints.
template <class T>
class CommutingSpace {
   public:
    explicit CommutingSpace(std::vector<Matrix<T>> basis) : basis_(std::move(basis)) {}
    std::size_t dim() const { return basis_.size(); }

    void impose(const Matrix<T>& g) {
        if (basis_.size() <= 1) return;
        const std::size_t d = g.rows();
        Matrix<T> e(d * d, basis_.size());
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            Matrix<T> c = basis_[j] * g - g * basis_[j];
            for (std::size_t x = 0; x < d * d; ++x) e(x, j) = c.data()[x];
        }
        Matrix<T> ker = nullspace(e);
        std::vector<Matrix<T>> next;
        for (std::size_t k = 0; k < ker.cols(); ++k) {
            Matrix<T> y(d, d);
            for (std::size_t j = 0; j < basis_.size(); ++j)
                if (!is_zero(ker(j, k))) y += basis_[j] * ker(j, k);
            next.push_back(std::move(y));
        }
        basis_ = std::move(next);
    }

   private:
    std::vector<Matrix<T>> basis_;
};

}  // namespace

template <class T>
CommutantResult commutant_dim(const FusedModuleSpec& Z, int K, std::uint64_t seed, bool force_full) {
    if (K < 2) throw Error(ErrorKind::IndexOutOfRange, "commutant needs K >= 2");
    CommutantResult res;
    const std::size_t dz = Z.dim();
    if (dz == 1) {
        res.dim = res.dim_previous = 1;
        res.stabilized = true;
        res.method = "krylov";
        return res;
    }
    const std::size_t N = Z.form().N();
    auto gens = generator_matrices<T>(Z, K);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto coeff = [&] { return T(static_cast<int>(rng() % 97) + 1); };
    auto combination = [&] {
        Matrix<T> g(dz, dz);
        for (int k = 1; k < K; ++k)
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) g += gens[k][i][j] * coeff();
        return g;
    };
    const Matrix<T> g1 = combination(), g2 = combination();

    // A cyclic g1 has commutant span{g1^k}; every commuting operator lies there.
    Matrix<T> krylov(dz, dz);
    std::vector<T> v(dz);
    for (auto& x : v) x = coeff();
    for (std::size_t k = 0; k < dz; ++k) {
        for (std::size_t i = 0; i < dz; ++i) krylov(i, k) = v[i];
        std::vector<T> w(dz, T(0));
        for (std::size_t i = 0; i < dz; ++i)
            for (std::size_t j = 0; j < dz; ++j) w[i] += g1(i, j) * v[j];
        v = std::move(w);
    }
    std::vector<Matrix<T>> start;
    if (!force_full && fast_rank(krylov) == dz) {
        res.method = "krylov";
        Matrix<T> p = Matrix<T>::identity(dz);
        for (std::size_t k = 0; k < dz; ++k) {
            start.push_back(p);
            p = p * g1;
        }
    } else {
        res.method = "full";
        for (std::size_t a = 0; a < dz; ++a)
            for (std::size_t b = 0; b < dz; ++b) {
                Matrix<T> e(dz, dz);
                e(a, b) = T(1);
                start.push_back(std::move(e));
            }
    }
    CommutingSpace<T> space(std::move(start));
    // The scalars always commute, so dimension one is final.
    space.impose(g1);
    space.impose(g2);
    auto impose_level = [&](int k) {
        for (std::size_t i = 0; i < N && space.dim() > 1; ++i)
            for (std::size_t j = 0; j < N && space.dim() > 1; ++j) space.impose(gens[k][i][j]);
    };
    for (int k = 1; k < K; ++k) impose_level(k);
    res.dim_previous = space.dim();
    impose_level(K);
    res.dim = space.dim();
    res.stabilized = res.dim == res.dim_previous;
    return res;
}

// ---------------------------------------------------------------------------------------------
// Verdict

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Irreducible: return "irreducible";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Reducible: return "reducible";
    }
    return {};
}

Verdict parse_verdict(const std::string& s) {
    if (s == "irreducible") return Verdict::Irreducible;
    if (s == "inconclusive") return Verdict::Inconclusive;
    if (s == "reducible") return Verdict::Reducible;
    throw Error(ErrorKind::ParseError, "unknown verdict '" + s + "'");
}

std::string to_string(Arithmetic a) {
    switch (a) {
        case Arithmetic::Auto: return "auto";
        case Arithmetic::Rational: return "rational";
        case Arithmetic::ModP: return "modp";
    }
    return {};
}

namespace {

template <class T>
void fill_report(IrreducibilityReport& rep, const FusedModuleSpec& Z, const IrreducibilityOptions& opt) {
    auto phi = phi_leading<T>(Z, opt.depth);
    auto s = surjectivity(phi);
    rep.laurent_order = phi.order;
    rep.phi_rank = s.rank;
    rep.phi_surjective = s.surjective;
    auto c = commutant_dim<T>(Z, rep.K, opt.seed);
    rep.commutant_dim = c.dim;
    rep.stabilized = c.stabilized;
}

}  // namespace

IrreducibilityReport irreducibility_verdict(const FusedModuleSpec& Z, const IrreducibilityOptions& opt) {
    IrreducibilityReport rep;
    rep.spec = Z.str();
    rep.form = to_string(Z.form().kind());
    rep.N = Z.N();
    rep.on_wall = walls(Z).violated();
    rep.K = opt.K > 0 ? opt.K : static_cast<int>(2 * Z.boxes() + 2);
    if (rep.K < 2) throw Error(ErrorKind::IndexOutOfRange, "K must be at least 2");
    Arithmetic a = opt.arithmetic;
    if (a == Arithmetic::Auto) a = Z.dim() <= kExactDimLimit ? Arithmetic::Rational : Arithmetic::ModP;
    rep.arithmetic = to_string(a);
    rep.commutant_exact = a == Arithmetic::Rational;
    if (a == Arithmetic::Rational)
        fill_report<Rational>(rep, Z, opt);
    else
        fill_report<ModP>(rep, Z, opt);
    if (rep.phi_surjective && rep.commutant_dim != 1)
        throw Error(ErrorKind::InternalInconsistency, "surjective leading operator but commutant dimension " +
                                                          std::to_string(rep.commutant_dim) + " at " + rep.spec);
    if (rep.phi_surjective || rep.commutant_dim == 1)
        rep.verdict = Verdict::Irreducible;
    else if (rep.commutant_exact && rep.stabilized && rep.commutant_dim > 1)
        rep.verdict = Verdict::Reducible;
    else
        rep.verdict = Verdict::Inconclusive;
    return rep;
}

template PhiOperatorT<Rational> phi_leading<Rational>(const FusedModuleSpec&, int);
template PhiOperatorT<ModP> phi_leading<ModP>(const FusedModuleSpec&, int);
template Surjectivity surjectivity<Rational>(const PhiOperatorT<Rational>&);
template Surjectivity surjectivity<ModP>(const PhiOperatorT<ModP>&);
template std::vector<std::vector<std::vector<Matrix<Rational>>>> generator_matrices<Rational>(const FusedModuleSpec&, int);
template std::vector<std::vector<std::vector<Matrix<ModP>>>> generator_matrices<ModP>(const FusedModuleSpec&, int);
template CommutantResult commutant_dim<Rational>(const FusedModuleSpec&, int, std::uint64_t, bool);
template CommutantResult commutant_dim<ModP>(const FusedModuleSpec&, int, std::uint64_t, bool);
template std::size_t fast_rank<ModP>(Matrix<ModP>);

}  // namespace twyang
