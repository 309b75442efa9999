#pragma once

#include "hcs/scalar/tower_scalar.hpp"

#include <vector>

namespace hcs {

// Dense square or rectangular matrix over the tower field.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    TowerScalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const TowerScalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator-(const Matrix& x, const Matrix& y);
    Matrix scaled(const TowerScalar& c) const;
    Matrix operator-() const { return scaled(TowerScalar(-1)); }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    bool is_zero() const;
    bool is_diagonal() const;
    // Column j as a vector.
    std::vector<TowerScalar> column(int j) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<TowerScalar> a_;
};

// Incremental row echelon form: rows are reduced against the pivots seen so far and kept
// when independent. Gaussian elimination with exact inverses in the tower field.
class RowEchelon {
public:
    explicit RowEchelon(int cols) : cols_(cols) {}
    // Returns true when the row was independent of the previous ones.
    bool add(std::vector<TowerScalar> row);
    int rank() const { return static_cast<int>(pivots_.size()); }
    int cols() const { return cols_; }
    // Pivot column of each kept row, in insertion order.
    const std::vector<int>& pivot_columns() const { return pivot_cols_; }

private:
    int cols_;
    std::vector<std::vector<TowerScalar>> pivots_;  // normalized: pivot entry is 1
    std::vector<int> pivot_cols_;
};

int rank(const Matrix& m);
// Gauss-Jordan inverse; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

}  // namespace hcs
