#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace arrpot {

using Index = std::size_t;
/// Ordered tuple of hyperplane indices (0-based). Sorted when it denotes a set.
using IndexTuple = std::vector<Index>;

/// Sorts the tuple and returns the sign of the sorting permutation; the sign
/// is 0 when an index repeats.
std::pair<int, IndexTuple> sort_with_sign(IndexTuple tuple);

/// All sorted `size`-subsets of {0, ..., n-1} in lexicographic order.
std::vector<IndexTuple> combinations(std::size_t n, std::size_t size);

/// "1,3,4": 1-based, comma separated.
std::string format_tuple(const IndexTuple& tuple);

/// Inverse of format_tuple; throws InputError on malformed text.
IndexTuple parse_tuple(const std::string& text);

bool contains(const IndexTuple& tuple, Index value);

}  // namespace arrpot
