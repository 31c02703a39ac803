#pragma once

#include "arrpot/arrangement.hpp"
#include "arrpot/flag_space.hpp"

#include <string>
#include <vector>

namespace arrpot {

/// Ordered tuple of disjoint sorted blocks (J_1, ..., J_m) of type
/// lambda = (|J_1|-1, ..., |J_m|-1) with sum lambda = k. The prefix unions
/// J_1 u ... u J_h span a space of dimension lambda_1 + ... + lambda_h, and
/// removing any single index from a prefix union keeps that dimension.
///
/// Block order matters: (A, B) and (B, A) are different subarrangements
/// whenever both satisfy the rank conditions.
struct ElementarySubarrangement {
    std::vector<IndexTuple> blocks;

    std::vector<std::size_t> type() const;
    /// lambda^h = lambda_1 + ... + lambda_h, h = 1..m.
    std::vector<std::size_t> partial_ranks() const;
    /// Indices of blocks 1..h (h is 1-based), sorted.
    IndexTuple prefix_union(std::size_t h) const;
    IndexTuple support() const { return prefix_union(blocks.size()); }

    friend bool operator==(const ElementarySubarrangement&, const ElementarySubarrangement&) = default;
    friend auto operator<=>(const ElementarySubarrangement&, const ElementarySubarrangement&) = default;
};

/// "({1,2},{3,4})" with 1-based indices.
std::string to_string(const ElementarySubarrangement& e);

/// Indices i with g_i in the span of blocks 1..h (h is 1-based): the flat.
IndexTuple level_flat(const ArrangementFamily& arr, const ElementarySubarrangement& e, std::size_t h);

/// Level weights a(E, J, h) for h = 1..m-1: sum of a_i over the i whose g_i
/// leaves the level-h span. total = a_J * prod of the level weights.
struct SubarrWeight {
    RatVector levels;
    Rat total;
};

/// Blocks may be given unsorted internally; throws std::invalid_argument when
/// blocks overlap or a block has fewer than two indices.
bool is_elementary(const ArrangementFamily& arr, const std::vector<IndexTuple>& blocks);

/// All elementary subarrangements, ordered by number of blocks, then blocks.
std::vector<ElementarySubarrangement> enumerate_elementary(const ArrangementFamily& arr);

/// One index dropped from each block, remaining indices concatenated in block
/// order; lexicographically sorted list of prod(lambda_h + 1) tuples.
std::vector<IndexTuple> distinguished_elements(const ElementarySubarrangement& e);

/// True when `tuple` as a set meets every block in lambda_h indices.
bool is_distinguished(const ElementarySubarrangement& e, const IndexTuple& tuple);

/// Wedge of the alternating block sums sum_i (-1)^(i+1) a_{j_i} F_{J_h - j_i}
/// with blocks in sorted order.
FlagVector singular_element(const ArrangementFamily& arr, const ElementarySubarrangement& e);

/// The same element with its sign chosen so F_anchor (ordered) enters with
/// coefficient prod over blocks of the weight of the dropped index.
/// Throws std::invalid_argument if the anchor is not distinguished.
FlagVector singular_element(const ArrangementFamily& arr, const ElementarySubarrangement& e,
                            const IndexTuple& anchor);

SubarrWeight subarr_weight(const ArrangementFamily& arr, const ElementarySubarrangement& e);

/// Closed-form projection: sum over elementary subarrangements having F_I as a
/// distinguished element of singular_element(E, I) / a(E, J).
/// Throws BalancedWeightsError on a zero subarrangement weight.
FlagVector project_formula(const ArrangementFamily& arr, const IndexTuple& ordered);
FlagVector project_formula(const ArrangementFamily& arr, const IndexTuple& ordered,
                           const std::vector<ElementarySubarrangement>& elementary);

}  // namespace arrpot
