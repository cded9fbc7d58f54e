#ifndef ATORIC_EXACTMATH_HPP
#define ATORIC_EXACTMATH_HPP

// Exact integer/rational scalars, vectors and dense matrices.
//
// Integers and rationals are GMP-backed. mpq_class arithmetic always yields
// canonical values (reduced, positive denominator); anything built from a raw
// numerator/denominator pair goes through make_rational().

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atoric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, std::span<const Integer> v);
RatMatrix to_rational(const IntMatrix& m);

/// Rank via Bareiss fraction-free elimination. Rational input is first scaled
/// row-by-row to integers.
std::size_t rank_exact(const IntMatrix& m);
std::size_t rank_exact(const RatMatrix& m);

/// Rank via plain Gaussian elimination over Q. Kept as an independent route
/// for cross-checking rank_exact.
std::size_t rank_gaussian(const RatMatrix& m);

/// Determinant of a square integer matrix (Bareiss).
Integer determinant(const IntMatrix& m);

/// det of the n x n submatrix of an n x (n+2) matrix with columns i and j removed.
Integer maximal_minor(const IntMatrix& a, std::size_t i, std::size_t j);

/// Submatrix keeping the listed columns, in the listed order.
IntMatrix select_columns(const IntMatrix& a, std::span<const std::size_t> columns);

/// gcd of the absolute values of the entries. Throws std::domain_error on the zero vector.
Integer content(std::span<const Integer> v);

struct Nullspace {
    std::size_t dimension = 0;
    std::vector<RatVector> basis;
};

/// Right nullspace from the reduced row echelon form; one basis vector per
/// free column, with a 1 in that column.
Nullspace nullspace(const RatMatrix& m);

/// Reduced row echelon form (pivots chosen as first nonzero entry in column order).
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivot_columns = nullptr);

/// Inverse of a square rational matrix; throws std::domain_error if singular.
RatMatrix inverse(const RatMatrix& m);

/// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> v);

std::string to_string(const Integer& z);

}  // namespace atoric

#endif
