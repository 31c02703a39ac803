#include "arrpot/potentials.hpp"

#include "arrpot/errors.hpp"

#include <stdexcept>

namespace arrpot {

Rat AdaptedBasis::aux_minor(const IndexTuple& ordered, std::size_t h) const {
    const std::size_t start = level_start(h);
    const std::size_t size = level_size(h);
    if (ordered.size() != size) throw std::invalid_argument("auxiliary minor needs lambda_h indices");
    RatMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t l = 0; l < size; ++l) m(i, l) = c.at(ordered[l])[start + i];
    return det(m);
}

RatMatrix AdaptedBasis::diagonal_block(const IndexTuple& ordered, std::size_t h) const {
    const std::size_t start = level_start(h);
    const IndexTuple part(ordered.begin() + static_cast<std::ptrdiff_t>(start),
                          ordered.begin() + static_cast<std::ptrdiff_t>(start + level_size(h)));
    const std::size_t size = part.size();
    RatMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t l = 0; l < size; ++l) m(i, l) = c.at(part[l])[start + i];
    return m;
}

AdaptedBasis adapted_basis(const ArrangementFamily& arr, const ElementarySubarrangement& e) {
    const std::size_t k = arr.k();
    AdaptedBasis basis;
    basis.partial_ranks = e.partial_ranks();

    std::vector<RatVector> rows;
    auto try_add = [&](RatVector v) {
        rows.push_back(std::move(v));
        if (rank(RatMatrix::from_rows(rows)) < rows.size()) rows.pop_back();
    };
    for (std::size_t h = 1; h < e.blocks.size(); ++h) {
        for (Index j : e.blocks[h - 1]) {
            if (rows.size() == basis.partial_ranks[h - 1]) break;
            try_add(arr.column(j));
        }
        if (rows.size() != basis.partial_ranks[h - 1]) throw std::logic_error("filtration level has the wrong rank");
    }
    for (std::size_t i = 0; i < k && rows.size() < k; ++i) {
        RatVector unit(k, 0);
        unit[i] = 1;
        try_add(std::move(unit));
    }

    basis.s = RatMatrix::from_rows(rows);
    const Rat d = det(basis.s);
    for (std::size_t col = 0; col < k; ++col) basis.s(k - 1, col) /= d;

    const RatMatrix st = basis.s.transpose();
    for (Index j = 0; j < arr.n(); ++j) {
        auto cj = solve(st, arr.column(j));
        if (!cj) throw std::logic_error("adapted basis is singular");
        basis.c.push_back(std::move(*cj));
    }
    return basis;
}

namespace {

IndexTuple without(const IndexTuple& block, std::size_t position) {
    IndexTuple rest;
    for (std::size_t i = 0; i < block.size(); ++i)
        if (i != position) rest.push_back(block[i]);
    return rest;
}

// Signed auxiliary minors (-1)^(i+1) d_{J_h - j_i; h}, one per block entry.
RatVector alternating_minors(const AdaptedBasis& basis, const IndexTuple& block, std::size_t h) {
    RatVector out;
    for (std::size_t i = 0; i < block.size(); ++i) {
        const Rat d = basis.aux_minor(without(block, i), h);
        out.push_back(i % 2 == 0 ? d : Rat(-d));
    }
    return out;
}

LinearForm f_aux_with(const ArrangementFamily& arr, const ElementarySubarrangement& e, const AdaptedBasis& basis,
                      std::size_t h, EChoice choice) {
    const IndexTuple& block = e.blocks.at(h - 1);
    const RatVector signed_minors = alternating_minors(basis, block, h);
    LinearForm f;
    for (std::size_t i = 0; i < block.size(); ++i) f.add(block[i], signed_minors[i]);
    for (const auto& [j, ej] : e_coefficients(arr, e, basis, h, choice)) f.add(j, ej);
    return f;
}

PotentialExpr level_with(const ArrangementFamily& arr, const ElementarySubarrangement& e, const AdaptedBasis& basis,
                         std::size_t h, EChoice choice) {
    const IndexTuple& block = e.blocks.at(h - 1);
    const unsigned lambda = static_cast<unsigned>(block.size() - 1);
    Rat coeff = 1 / factorial(2 * lambda);
    for (Index j : block) coeff *= arr.weight(j);
    for (std::size_t i = 0; i < block.size(); ++i) {
        const Rat d = basis.aux_minor(without(block, i), h);
        if (sgn(d) == 0) throw std::logic_error("vanishing auxiliary minor");
        coeff /= d * d;
    }
    return PotentialExpr::term(coeff, {{f_aux_with(arr, e, basis, h, choice), static_cast<int>(2 * lambda)}});
}

PotentialExpr prepotential_with(const ArrangementFamily& arr, const ElementarySubarrangement& e,
                                const AdaptedBasis& basis, EChoice choice) {
    PotentialExpr product = PotentialExpr::constant(1);
    for (std::size_t h = 1; h <= e.blocks.size(); ++h) product = product * level_with(arr, e, basis, h, choice);
    return product;
}

}  // namespace

std::map<Index, Rat> e_coefficients(const ArrangementFamily& arr, const ElementarySubarrangement& e,
                                    const AdaptedBasis& basis, std::size_t h, EChoice choice) {
    if (h < 1 || h > e.blocks.size()) throw std::out_of_range("level out of range");
    if (h == 1) return {};
    const IndexTuple& block = e.blocks[h - 1];
    const RatVector signed_minors = alternating_minors(basis, block, h);
    RatVector rhs(arr.k(), 0);
    for (std::size_t i = 0; i < block.size(); ++i) {
        const RatVector g = arr.column(block[i]);
        for (std::size_t r = 0; r < arr.k(); ++r) rhs[r] -= signed_minors[i] * g[r];
    }
    const IndexTuple lower = e.prefix_union(h - 1);
    std::vector<RatVector> cols;
    for (Index j : lower) cols.push_back(arr.column(j));
    const RatMatrix a = RatMatrix::from_columns(arr.k(), cols);
    auto sol = solve(a, rhs);
    if (!sol) throw std::logic_error("level combination does not lie in the lower span");
    if (choice == EChoice::Alternate) {
        const auto kernel = nullspace(a);
        if (!kernel.empty())
            for (std::size_t i = 0; i < sol->size(); ++i) (*sol)[i] -= kernel.front()[i];
    }
    std::map<Index, Rat> out;
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (sgn((*sol)[i]) != 0) out.emplace(lower[i], (*sol)[i]);
    return out;
}

std::map<Index, Rat> e_coefficients(const ArrangementFamily& arr, const ElementarySubarrangement& e, std::size_t h,
                                    EChoice choice) {
    return e_coefficients(arr, e, adapted_basis(arr, e), h, choice);
}

bool has_alternate_e(const ArrangementFamily& arr, const ElementarySubarrangement& e) {
    for (std::size_t h = 2; h <= e.blocks.size(); ++h)
        if (e.prefix_union(h - 1).size() > subset_rank(arr, e.prefix_union(h - 1))) return true;
    return false;
}

LinearForm f_aux(const ArrangementFamily& arr, const ElementarySubarrangement& e, std::size_t h, EChoice choice) {
    return f_aux_with(arr, e, adapted_basis(arr, e), h, choice);
}

PotentialExpr prepotential_level(const ArrangementFamily& arr, const ElementarySubarrangement& e, std::size_t h,
                                 EChoice choice) {
    return level_with(arr, e, adapted_basis(arr, e), h, choice);
}

PotentialExpr prepotential_first(const ArrangementFamily& arr, const ElementarySubarrangement& e, EChoice choice) {
    return prepotential_with(arr, e, adapted_basis(arr, e), choice);
}

void require_nonzero_subarrangement_weights(const ArrangementFamily& arr,
                                            const std::vector<ElementarySubarrangement>& elementary) {
    if (sgn(arr.total_weight()) == 0)
        throw BalancedWeightsError("total weight a_J vanishes (flat: the whole arrangement)");
    for (const auto& e : elementary) {
        const SubarrWeight w = subarr_weight(arr, e);
        for (std::size_t h = 0; h < w.levels.size(); ++h)
            if (sgn(w.levels[h]) == 0)
                throw BalancedWeightsError("elementary subarrangement " + to_string(e) + " has zero level-" +
                                           std::to_string(h + 1) + " weight (flat {" +
                                           format_tuple(level_flat(arr, e, h + 1)) + "})");
    }
}

PotentialExpr potential_first(const ArrangementFamily& arr, EChoice choice) {
    const auto elementary = enumerate_elementary(arr);
    require_nonzero_subarrangement_weights(arr, elementary);
    PotentialExpr p;
    for (const auto& e : elementary)
        p += (1 / subarr_weight(arr, e).total) * prepotential_with(arr, e, adapted_basis(arr, e), choice);
    return p;
}

PotentialExpr potential_second(const ArrangementFamily& arr, EChoice choice) {
    const auto elementary = enumerate_elementary(arr);
    require_nonzero_subarrangement_weights(arr, elementary);
    PotentialExpr q;
    for (const auto& e : elementary) {
        const AdaptedBasis basis = adapted_basis(arr, e);
        const PotentialExpr log_factor = PotentialExpr::term(1, {}, f_aux_with(arr, e, basis, 1, choice));
        q += (arr.total_weight() / subarr_weight(arr, e).total) * (log_factor * prepotential_with(arr, e, basis, choice));
    }
    return q;
}

}  // namespace arrpot
