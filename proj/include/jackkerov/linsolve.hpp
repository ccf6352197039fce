#pragma once

#include <cstddef>
#include <vector>

#include "jackkerov/field.hpp"

namespace jackkerov {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) data_.insert(data_.end(), row.begin(), row.end());
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> operator*(const std::vector<T>& x) const
    {
        std::vector<T> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
        return y;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

struct ExactSolution {
    std::vector<FieldElement> x;
    std::size_t rank = 0;
};

/// Solves A x = b exactly over Q(t) by Gaussian elimination, choosing at each
/// step the pivot of smallest total degree. Requires rows >= cols.
/// Throws RankDeficient (column rank < cols) or Inconsistent (with the index of
/// an input row that reduces to 0 = c, c != 0).
ExactSolution solve_exact(Matrix<FieldElement> a, std::vector<FieldElement> b);

/// Same elimination over Q; used for constant conversion matrices.
std::vector<Rational> solve_exact(Matrix<Rational> a, std::vector<Rational> b);

/// Inverse of a square rational matrix.
Matrix<Rational> inverse(const Matrix<Rational>& a);

}  // namespace jackkerov
