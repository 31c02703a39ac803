#pragma once

#include "arrpot/arrangement.hpp"
#include "arrpot/elementary.hpp"
#include "arrpot/expression.hpp"

#include <map>
#include <vector>

namespace arrpot {

/// Basis s_1..s_k of the dual space adapted to the filtration of an
/// elementary subarrangement: s_1..s_{lambda^h} span the level-h prefix.
struct AdaptedBasis {
    /// Row r holds s_{r+1} in t-coordinates. det(s) == 1.
    RatMatrix s;
    /// c[j] = coordinates of g_j in the s-basis, for every j in 0..n-1.
    std::vector<RatVector> c;
    /// lambda^1, ..., lambda^m.
    std::vector<std::size_t> partial_ranks;

    /// First row index of level h (1-based h), i.e. lambda^{h-1}.
    std::size_t level_start(std::size_t h) const { return h == 1 ? 0 : partial_ranks[h - 2]; }
    std::size_t level_size(std::size_t h) const { return partial_ranks[h - 1] - level_start(h); }
    /// d_{I;h}: determinant of the level-h coefficients of the ordered
    /// lambda_h-tuple I.
    Rat aux_minor(const IndexTuple& ordered, std::size_t h) const;
    /// Diagonal block C_h of the ordered k-tuple K (blocks taken in order).
    RatMatrix diagonal_block(const IndexTuple& ordered, std::size_t h) const;
};

/// Levels 1..m-1 take block columns, in sorted order, that raise the rank;
/// the last level is completed with unit vectors; the last row is divided
/// by the determinant. For m = 1 this is the identity.
AdaptedBasis adapted_basis(const ArrangementFamily& arr, const ElementarySubarrangement& e);

enum class EChoice { Canonical, Alternate };

/// Numbers e_j, j in blocks 1..h-1, with
///   sum_i (-1)^(i+1) d_{J_h - j_i; h} g_{j_i} + sum_j e_j g_j = 0.
/// Canonical: free variables zero. Alternate: canonical minus the first
/// kernel vector (equal to canonical when the solution is unique).
/// h is 1-based; h = 1 gives an empty map.
std::map<Index, Rat> e_coefficients(const ArrangementFamily& arr, const ElementarySubarrangement& e, std::size_t h,
                                    EChoice choice = EChoice::Canonical);
std::map<Index, Rat> e_coefficients(const ArrangementFamily& arr, const ElementarySubarrangement& e,
                                    const AdaptedBasis& basis, std::size_t h, EChoice choice = EChoice::Canonical);

/// True when some level of e admits more than one e-solution.
bool has_alternate_e(const ArrangementFamily& arr, const ElementarySubarrangement& e);

/// f_h = sum_i (-1)^(i+1) d_{J_h - j_i; h} z_{j_i} + sum_j e_j z_j.
LinearForm f_aux(const ArrangementFamily& arr, const ElementarySubarrangement& e, std::size_t h,
                 EChoice choice = EChoice::Canonical);

/// prod_h (prod_{J_h} a / (2 lambda_h)!) f_h^{2 lambda_h} / (prod_i d_{J_h - j_i; h})^2
PotentialExpr prepotential_first(const ArrangementFamily& arr, const ElementarySubarrangement& e,
                                 EChoice choice = EChoice::Canonical);

/// One level factor of prepotential_first.
PotentialExpr prepotential_level(const ArrangementFamily& arr, const ElementarySubarrangement& e, std::size_t h,
                                 EChoice choice = EChoice::Canonical);

/// Throws BalancedWeightsError naming the flat when a subarrangement weight
/// vanishes (a_J or one of the level weights).
void require_nonzero_subarrangement_weights(const ArrangementFamily& arr,
                                            const std::vector<ElementarySubarrangement>& elementary);

/// P = sum_E prepotential_first(E) / a(E).
PotentialExpr potential_first(const ArrangementFamily& arr, EChoice choice = EChoice::Canonical);
/// Q = sum_E (a_J / a(E)) ln(f_{E,1}) prepotential_first(E).
PotentialExpr potential_second(const ArrangementFamily& arr, EChoice choice = EChoice::Canonical);

}  // namespace arrpot
