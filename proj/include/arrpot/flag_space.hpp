#pragma once

#include "arrpot/arrangement.hpp"

#include <map>
#include <string>
#include <vector>

namespace arrpot {

/// Element of the top flag space in the standard basis: coordinates keyed by
/// sorted independent k-subsets. Zero coordinates are never stored, so two
/// vectors are equal iff their maps are equal.
class FlagVector {
public:
    using Map = std::map<IndexTuple, Rat>;

    FlagVector() = default;

    /// Adds c * F_key for an already sorted key.
    void add(const IndexTuple& sorted_key, const Rat& c);
    Rat coefficient(const IndexTuple& sorted_key) const;

    const Map& terms() const noexcept { return coords_; }
    bool is_zero() const noexcept { return coords_.empty(); }
    std::size_t size() const noexcept { return coords_.size(); }

    FlagVector& operator+=(const FlagVector& other);
    FlagVector& operator-=(const FlagVector& other);
    FlagVector& operator*=(const Rat& s);
    friend FlagVector operator+(FlagVector a, const FlagVector& b) { return a += b; }
    friend FlagVector operator-(FlagVector a, const FlagVector& b) { return a -= b; }
    friend FlagVector operator*(const Rat& s, FlagVector a) { return a *= s; }

    friend bool operator==(const FlagVector&, const FlagVector&) = default;

    /// "2/3*F[1] - 1/3*F[2]" with 1-based indices.
    std::string to_string() const;

private:
    Map coords_;
};

/// Standard basis vector F_I for an ordered tuple: +-1 on sorted(I) by the
/// sign of the sorting permutation, zero when I is dependent.
FlagVector basic(const ArrangementFamily& arr, const IndexTuple& ordered);

/// Adds c * F_I (ordered I, skew rule applied) to `target`.
void add_basic(FlagVector& target, const ArrangementFamily& arr, const IndexTuple& ordered, const Rat& c);

/// Contravariant form: diagonal in the standard basis with entries prod_{i in I} a_i.
Rat contravariant(const ArrangementFamily& arr, const FlagVector& u, const FlagVector& v);

/// sum_j F_{j, i_1..i_{k-1}} for every independent (k-1)-subset, lexicographic.
std::vector<FlagVector> complement_generators(const ArrangementFamily& arr);

/// Orthogonal projection onto Sing computed from scratch: F minus the unique
/// combination of complement generators that makes it orthogonal to all of them.
/// Throws BalancedWeightsError when the form is degenerate on the generators' span.
FlagVector project_oracle(const ArrangementFamily& arr, const FlagVector& f);

/// mu = #independent k-subsets - rank of the complement generators.
std::size_t sing_dimension(const ArrangementFamily& arr);

/// Rank of a family of flag vectors.
std::size_t span_rank(const std::vector<FlagVector>& vectors);

}  // namespace arrpot
