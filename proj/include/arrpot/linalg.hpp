#pragma once

#include "arrpot/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace arrpot {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& columns);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatVector column(std::size_t c) const;
    RatVector row(std::size_t r) const;
    RatMatrix transpose() const;
    /// Sub-matrix made of the listed columns, in the listed order.
    RatMatrix select_columns(const std::vector<std::size_t>& cols) const;

    bool is_zero() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& a);
RatVector operator*(const RatMatrix& a, const RatVector& x);

/// Reduced row echelon form with leading ones. Pivots are chosen left to
/// right, taking the first row with a nonzero entry in the column.
struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

RowEchelon rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Exact determinant; throws std::invalid_argument for non-square input.
Rat det(const RatMatrix& m);

/// Canonical solution of a x = b: free variables are zero, pivots are the
/// lowest-index columns. nullopt when the system is inconsistent. Throws
/// std::invalid_argument when b's length differs from a.rows().
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Kernel basis read off the RREF: one vector per free column (in increasing
/// order) with that free variable set to one and the others zero.
std::vector<RatVector> nullspace(const RatMatrix& m);

}  // namespace arrpot
