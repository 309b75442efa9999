#include "hcs/repr/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hcs {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = TowerScalar(1);
    return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const TowerScalar& a = x(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < y.cols_; ++j)
                if (!y(k, j).is_zero()) r(i, j) += a * y(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Matrix: size mismatch in sum");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Matrix: size mismatch in difference");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
}

Matrix Matrix::scaled(const TowerScalar& c) const {
    Matrix r = *this;
    for (auto& v : r.a_)
        if (!v.is_zero()) v = v * c;
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

std::vector<TowerScalar> Matrix::column(int j) const {
    std::vector<TowerScalar> v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
    return v;
}

bool RowEchelon::add(std::vector<TowerScalar> row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("RowEchelon: row length");
    for (std::size_t p = 0; p < pivots_.size(); ++p) {
        const auto c = static_cast<std::size_t>(pivot_cols_[p]);
        if (row[c].is_zero()) continue;
        const TowerScalar f = row[c];
        const auto& pr = pivots_[p];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!pr[j].is_zero()) row[j] -= f * pr[j];
    }
    int pc = -1;
    for (int j = 0; j < cols_; ++j)
        if (!row[static_cast<std::size_t>(j)].is_zero()) {
            pc = j;
            break;
        }
    if (pc < 0) return false;
    const TowerScalar inv = row[static_cast<std::size_t>(pc)].inverse();
    for (auto& v : row)
        if (!v.is_zero()) v = v * inv;
    // Keep earlier pivots reduced in the new pivot column so later rows see a consistent basis.
    for (auto& pr : pivots_) {
        const TowerScalar f = pr[static_cast<std::size_t>(pc)];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) pr[j] -= f * row[j];
    }
    pivots_.push_back(std::move(row));
    pivot_cols_.push_back(pc);
    return true;
}

int rank(const Matrix& m) {
    RowEchelon e(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<TowerScalar> r(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) r[static_cast<std::size_t>(j)] = m(i, j);
        e.add(std::move(r));
    }
    return e.rank();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const int n = m.rows();
    Matrix a = m, r = Matrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(r(p, j), r(c, j));
            }
        const TowerScalar inv = a(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            if (!a(c, j).is_zero()) a(c, j) = a(c, j) * inv;
            if (!r(c, j).is_zero()) r(c, j) = r(c, j) * inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const TowerScalar f = a(i, c);
            for (int j = 0; j < n; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
                if (!r(c, j).is_zero()) r(i, j) -= f * r(c, j);
            }
        }
    }
    return r;
}

}  // namespace hcs
