#include "arrpot/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace arrpot {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<RatVector>& columns) {
    RatMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RatVector RatMatrix::column(std::size_t c) const {
    RatVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

RatVector RatMatrix::row(std::size_t r) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RatMatrix RatMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    RatMatrix s(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(r, cols.at(c));
    return s;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (sgn(a(i, l)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, l) * b(l, j);
        }
    return p;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    RatMatrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
    return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    return a + Rat(-1) * b;
}

RatMatrix operator*(const Rat& s, const RatMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(x[j]) != 0) y[i] += a(i, j) * x[j];
    return y;
}

RowEchelon rref(RatMatrix m) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));

        const Rat inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            const Rat factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) {
    return rref(m).pivot_columns.size();
}

Rat det(const RatMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("det: matrix is not square");
    RatMatrix m = input;
    const std::size_t n = m.rows();
    Rat result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            result = -result;
        }
        result *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m(r, col)) == 0) continue;
            const Rat factor = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return result;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");

    RatMatrix augmented(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
        augmented(r, a.cols()) = b[r];
    }
    const RowEchelon ech = rref(std::move(augmented));
    if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == a.cols()) return std::nullopt;

    RatVector x(a.cols());
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) x[ech.pivot_columns[i]] = ech.reduced(i, a.cols());
    return x;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    const RowEchelon ech = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_columns) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) v[ech.pivot_columns[i]] = -ech.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace arrpot
