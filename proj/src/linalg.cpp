#include "twyang/linalg.hpp"

#include <gmpxx.h>

namespace twyang {

namespace {

// Integer matrix with each row scaled by the lcm of its denominators.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix<Rational>& a) {
    std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mpq_class& q = a(i, j).raw();
            m[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return m;
}

struct BareissResult {
    std::vector<std::vector<mpz_class>> rows;  // first rank() rows form the echelon form
    std::vector<std::size_t> pivots;
};

BareissResult bareiss(const Matrix<Rational>& a) {
    BareissResult out;
    auto m = integer_rows(a);
    const std::size_t rows = a.rows(), cols = a.cols();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const mpz_class& piv = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = piv * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = piv;
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

}  // namespace

std::vector<std::size_t> bareiss_pivots(const Matrix<Rational>& a) { return bareiss(a).pivots; }

Matrix<Rational> bareiss_nullspace(const Matrix<Rational>& a) {
    auto b = bareiss(a);
    const std::size_t cols = a.cols(), rank = b.pivots.size();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : b.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix<Rational> basis(cols, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        std::vector<mpq_class> x(cols, 0);
        x[free[k]] = 1;
        for (std::size_t ii = rank; ii-- > 0;) {
            std::size_t pc = b.pivots[ii];
            mpq_class acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (x[j] != 0 && b.rows[ii][j] != 0) acc += mpq_class(b.rows[ii][j]) * x[j];
            x[pc] = -acc / mpq_class(b.rows[ii][pc]);
            x[pc].canonicalize();
        }
        for (std::size_t c = 0; c < cols; ++c) basis(c, k) = Rational(x[c]);
    }
    return basis;
}

}  // namespace twyang
