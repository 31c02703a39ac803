#pragma once

#include "arrpot/arrangement.hpp"
#include "arrpot/expression.hpp"
#include "arrpot/flag_space.hpp"

#include <optional>
#include <vector>

namespace arrpot {

/// Coordinates over the fixed Sing basis of a ResidueAlgebra.
using AlgebraElement = RatVector;

/// Which pREL rewrite multiply_by_p uses when j already occurs in I.
enum class Rewrite { Canonical, Alternate };

/// The algebra of functions on the critical set of a weighted fiber, carried
/// over to Sing through the marked elements. The basis is greedy
/// lexicographic: projected marked vectors v_I, I sorted independent in lex
/// order, kept when they raise the rank.
///
/// Projections come from the Gram-system oracle, not the closed formula, so
/// the two can be compared. Operators are built lazily; not thread-safe.
class ResidueAlgebra {
public:
    /// Throws DiscriminantError when z is on the discriminant and
    /// BalancedWeightsError when the contravariant form degenerates.
    ResidueAlgebra(ArrangementFamily arr, BasePoint z);

    const ArrangementFamily& arrangement() const noexcept { return arr_; }
    const BasePoint& base_point() const noexcept { return z_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    /// Sorted index sets of the basis elements w_I.
    const std::vector<IndexTuple>& basis_labels() const noexcept { return basis_; }
    /// All sorted independent k-subsets, lex order.
    const std::vector<IndexTuple>& independent() const noexcept { return independent_; }

    /// v_I = pi(F_I) for an ordered tuple; zero when I is dependent.
    FlagVector marked_vector(const IndexTuple& ordered) const;
    /// Coordinates of a vector of Sing; throws std::logic_error if it is not in Sing.
    AlgebraElement coordinates(const FlagVector& sing_vector) const;
    FlagVector sing_vector(const AlgebraElement& u) const;

    AlgebraElement marked_w(const IndexTuple& ordered) const;
    /// p_{i_1} ... p_{i_k} = w_I / d_I; throws std::invalid_argument if I is dependent.
    AlgebraElement monomial_p(const IndexTuple& ordered) const;

    AlgebraElement multiply_by_p(Index j, const AlgebraElement& u, Rewrite rewrite = Rewrite::Canonical) const;
    /// p_j * w_I as a vector of Sing.
    FlagVector p_times_w(Index j, const IndexTuple& ordered, Rewrite rewrite = Rewrite::Canonical) const;
    /// True when j is in I and a second (k-1)-subset is available for the rewrite.
    bool has_alternate_rewrite(Index j, const IndexTuple& ordered) const;

    /// K_j in the basis; column b is p_j * (basis element b).
    const RatMatrix& multiplication_operator(Index j) const;
    /// Operator of multiplication by basis element b: d_I K_{i_1} ... K_{i_k}.
    const RatMatrix& basis_operator(std::size_t b) const;
    AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;

    /// (u, v) = (-1)^k S(u, v) on Sing.
    Rat residue_pairing(const AlgebraElement& u, const AlgebraElement& v) const;
    /// Gram matrix of residue_pairing on the basis.
    const RatMatrix& gram() const noexcept { return gram_; }

private:
    std::optional<IndexTuple> alternate_subset(Index j, const IndexTuple& rest) const;
    FlagVector p_times_w_outside(Index j, const IndexTuple& ordered) const;

    ArrangementFamily arr_;
    BasePoint z_;
    std::vector<IndexTuple> independent_;
    std::vector<FlagVector> projected_;  // parallel to independent_
    std::vector<IndexTuple> basis_;
    std::vector<FlagVector> basis_vectors_;
    std::vector<IndexTuple> pivot_keys_;  // mu keys on which the basis is invertible
    RatMatrix pivot_inverse_;
    RatMatrix gram_;
    mutable std::vector<std::optional<RatMatrix>> operators_;
    mutable std::vector<std::optional<RatMatrix>> basis_operators_;
};

/// (-1)^k d^{2k} P / dz_I dz_L and the contravariant variant d_I d_L d^{2k} P.
struct PairingViaP {
    PotentialExpr expression;  // (-1)^k times the derivative
    bool z_independent = false;
    Rat value;                 // meaningful when z_independent
    Rat contravariant;         // d_I d_L times the derivative
};

PairingViaP pairing_via_P(const ArrangementFamily& arr, DerivativeCache& p_cache, const IndexTuple& i_ordered,
                          const IndexTuple& l_ordered);
PairingViaP pairing_via_P(const ArrangementFamily& arr, const PotentialExpr& p, const IndexTuple& i_ordered,
                          const IndexTuple& l_ordered);

/// (-1)^k d^{2k+1} Q / dz_{i0} dz_I dz_L at z. Throws EvaluationError at a pole.
Rat triple_via_Q(const ArrangementFamily& arr, DerivativeCache& q_cache, std::span<const Rat> z, Index i0,
                 const IndexTuple& i_ordered, const IndexTuple& l_ordered);
Rat triple_via_Q(const ArrangementFamily& arr, const PotentialExpr& q, std::span<const Rat> z, Index i0,
                 const IndexTuple& i_ordered, const IndexTuple& l_ordered);

}  // namespace arrpot
