#include "jackkerov/linsolve.hpp"

#include <numeric>
#include <stdexcept>

namespace jackkerov {

namespace {

int pivot_weight(const FieldElement& v) { return v.weight(); }
int pivot_weight(const Rational& v)
{
    return static_cast<int>(mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2));
}
bool is_zero(const FieldElement& v) { return v.is_zero(); }
bool is_zero(const Rational& v) { return v == 0; }

template <typename T>
std::vector<T> eliminate(Matrix<T>& a, std::vector<T>& b, std::size_t& rank_out)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("right-hand side size mismatch");
    if (rows < cols) throw std::invalid_argument("system has fewer equations than unknowns");

    std::vector<std::size_t> origin(rows);
    std::iota(origin.begin(), origin.end(), std::size_t{0});
    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(r1, c), a(r2, c));
        std::swap(b[r1], b[r2]);
        std::swap(origin[r1], origin[r2]);
    };

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t best = rows;
        int best_w = 0;
        for (std::size_t r = rank; r < rows; ++r) {
            if (is_zero(a(r, c))) continue;
            int w = pivot_weight(a(r, c));
            if (best == rows || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == rows) continue;
        swap_rows(rank, best);
        const T inv = T(1) / a(rank, c);
        for (std::size_t k = c; k < cols; ++k)
            if (!is_zero(a(rank, k))) a(rank, k) *= inv;
        b[rank] *= inv;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (is_zero(a(r, c))) continue;
            const T f = a(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!is_zero(a(rank, k))) a(r, k) -= f * a(rank, k);
            if (!is_zero(b[rank])) b[r] -= f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    rank_out = rank;
    for (std::size_t r = rank; r < rows; ++r)
        if (!is_zero(b[r])) throw Inconsistent(origin[r]);
    if (rank < cols) throw RankDeficient(rank);

    std::vector<T> x(cols);
    for (std::size_t i = rank; i-- > 0;) {
        T acc = b[i];
        for (std::size_t k = pivot_col[i] + 1; k < cols; ++k)
            if (!is_zero(a(i, k)) && !is_zero(x[k])) acc -= a(i, k) * x[k];
        x[pivot_col[i]] = acc;
    }
    return x;
}

}  // namespace

ExactSolution solve_exact(Matrix<FieldElement> a, std::vector<FieldElement> b)
{
    ExactSolution s;
    s.x = eliminate(a, b, s.rank);
    return s;
}

std::vector<Rational> solve_exact(Matrix<Rational> a, std::vector<Rational> b)
{
    std::size_t rank = 0;
    return eliminate(a, b, rank);
}

Matrix<Rational> inverse(const Matrix<Rational>& a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    // Gauss-Jordan on [A | I].
    Matrix<Rational> m(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
        m(r, n + r) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) throw RankDeficient(c);
        if (p != c)
            for (std::size_t k = 0; k < 2 * n; ++k) std::swap(m(p, k), m(c, k));
        Rational inv = 1 / m(c, c);
        for (std::size_t k = 0; k < 2 * n; ++k) m(c, k) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            Rational f = m(r, c);
            for (std::size_t k = 0; k < 2 * n; ++k)
                if (m(c, k) != 0) m(r, k) -= f * m(c, k);
        }
    }
    Matrix<Rational> out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = m(r, n + c);
    return out;
}

}  // namespace jackkerov
