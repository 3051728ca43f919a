#pragma once

#include <optional>
#include <vector>

#include "gnf/polynomial.hpp"

namespace gnf {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    Vector operator*(const Vector& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Row echelon form produced by fraction-free (Bareiss) elimination on the
/// denominator-cleared rows. Pivot columns are found in ascending column order,
/// so callers control pivot priority through the column order.
struct Echelon {
    std::vector<std::vector<Integer>> rows;  // nonzero rows only, in pivot order
    std::vector<std::size_t> pivots;         // pivot column of each row
    std::size_t cols = 0;
};

Echelon echelon(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0}; one vector per non-pivot column, with that column set to 1
/// and the other free columns set to 0.
std::vector<Vector> nullspace(const Matrix& a);

/// A particular solution of A x = b with all free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Determinant of a square matrix (Bareiss).
Rational determinant(const Matrix& a);

/// Reduced row echelon basis of the span of the given vectors.
std::vector<Vector> row_basis(const std::vector<Vector>& vectors, std::size_t dim);

}  // namespace gnf
