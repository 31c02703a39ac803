#pragma once

#include "arrpot/linalg.hpp"
#include "arrpot/linear_form.hpp"
#include "arrpot/rational.hpp"
#include "arrpot/subsets.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arrpot {

/// A family of affine arrangements in k-space, f_j = g_j + z_j, where g_j is
/// column j of the k x n coefficient matrix and z is the base point. Each
/// hyperplane carries a nonzero weight a_j.
///
/// Construction validates: n > k >= 1, no zero column, the columns span
/// k-space, every weight nonzero. The object is immutable afterwards.
class ArrangementFamily {
public:
    ArrangementFamily(RatMatrix coefficients, RatVector weights, std::vector<std::string> labels = {});

    std::size_t k() const noexcept { return b_.rows(); }
    std::size_t n() const noexcept { return b_.cols(); }

    const RatMatrix& coefficients() const noexcept { return b_; }
    RatVector column(Index j) const { return b_.column(j); }

    const RatVector& weights() const noexcept { return weights_; }
    const Rat& weight(Index j) const { return weights_.at(j); }
    /// a_J, the sum of all weights.
    Rat total_weight() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Same geometry, different weights (validated again).
    ArrangementFamily with_weights(RatVector weights) const;

private:
    RatMatrix b_;
    RatVector weights_;
    std::vector<std::string> labels_;
};

/// Base point z = (z_1, ..., z_n).
using BasePoint = RatVector;

std::size_t subset_rank(const ArrangementFamily& arr, std::span<const Index> subset);

bool is_independent(const ArrangementFamily& arr, std::span<const Index> subset);

/// d_I: determinant of the selected columns in the given order. |I| must be k.
Rat minor(const ArrangementFamily& arr, std::span<const Index> ordered);

/// Sorted independent subsets of the given size, lexicographic.
std::vector<IndexTuple> independent_subsets(const ArrangementFamily& arr, std::size_t size);

/// Minimal dependent subsets, each sorted, list in lexicographic order.
std::vector<IndexTuple> circuits(const ArrangementFamily& arr);

/// f_C(z) = sum_j (-1)^(j+1) z_{c_j} d_{C - c_j} for an ordered (k+1)-set of rank k.
LinearForm circuit_form(const ArrangementFamily& arr, std::span<const Index> ordered);

/// A circuit whose hyperplanes share a point at z, if any.
std::optional<IndexTuple> discriminant_witness(const ArrangementFamily& arr, std::span<const Rat> z);

bool in_discriminant(const ArrangementFamily& arr, std::span<const Rat> z);

/// Nonzero weight on every dense edge of the projective closure (fibers off
/// the discriminant). Affine dense edges of a normal-crossing fiber are the
/// hyperplanes themselves; an edge at infinity is given by a proper flat U of
/// the column matroid, it is dense iff the restriction to U has no coloop, and
/// its weight is -sum_{j not in U} a_j.
bool is_unbalanced(const ArrangementFamily& arr);
bool is_unbalanced(const ArrangementFamily& arr, std::span<const Rat> weights);

/// First dense edge at infinity with zero weight, as the flat's index set.
std::optional<IndexTuple> zero_weight_dense_flat(const ArrangementFamily& arr, std::span<const Rat> weights);

bool all_weights_positive(const ArrangementFamily& arr);

}  // namespace arrpot
