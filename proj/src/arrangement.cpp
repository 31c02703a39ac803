#include "arrpot/arrangement.hpp"

#include "arrpot/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arrpot {

namespace {

void check_indices(const ArrangementFamily& arr, std::span<const Index> subset) {
    for (Index j : subset)
        if (j >= arr.n()) throw std::out_of_range("hyperplane index " + std::to_string(j + 1) + " out of range");
}

void validate(const RatMatrix& b, const RatVector& weights, const std::vector<std::string>& labels) {
    const std::size_t k = b.rows();
    const std::size_t n = b.cols();
    if (k < 1) throw InputError("ambient dimension k must be at least 1");
    if (n <= k) throw InputError("need more hyperplanes than dimensions (n > k)");
    if (weights.size() != n) throw InputError("expected " + std::to_string(n) + " weights");
    if (!labels.empty() && labels.size() != n) throw InputError("expected " + std::to_string(n) + " labels");
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < k; ++i) zero = zero && sgn(b(i, j)) == 0;
        if (zero) throw InputError("column " + std::to_string(j + 1) + " is zero");
        if (sgn(weights[j]) == 0) throw InputError("weight a_" + std::to_string(j + 1) + " is zero");
    }
    if (rank(b) != k) throw InputError("columns do not span the dual space");
}

}  // namespace

ArrangementFamily::ArrangementFamily(RatMatrix coefficients, RatVector weights, std::vector<std::string> labels)
    : b_(std::move(coefficients)), weights_(std::move(weights)), labels_(std::move(labels)) {
    validate(b_, weights_, labels_);
    if (labels_.empty())
        for (std::size_t j = 0; j < n(); ++j) labels_.push_back("H" + std::to_string(j + 1));
}

Rat ArrangementFamily::total_weight() const {
    Rat sum = 0;
    for (const auto& a : weights_) sum += a;
    return sum;
}

ArrangementFamily ArrangementFamily::with_weights(RatVector weights) const {
    return ArrangementFamily(b_, std::move(weights), labels_);
}

std::size_t subset_rank(const ArrangementFamily& arr, std::span<const Index> subset) {
    check_indices(arr, subset);
    if (subset.empty()) return 0;
    return rank(arr.coefficients().select_columns(IndexTuple(subset.begin(), subset.end())));
}

bool is_independent(const ArrangementFamily& arr, std::span<const Index> subset) {
    return subset_rank(arr, subset) == subset.size();
}

Rat minor(const ArrangementFamily& arr, std::span<const Index> ordered) {
    if (ordered.size() != arr.k())
        throw std::invalid_argument("minor needs exactly k = " + std::to_string(arr.k()) + " indices");
    check_indices(arr, ordered);
    return det(arr.coefficients().select_columns(IndexTuple(ordered.begin(), ordered.end())));
}

std::vector<IndexTuple> independent_subsets(const ArrangementFamily& arr, std::size_t size) {
    std::vector<IndexTuple> out;
    for (auto& s : combinations(arr.n(), size))
        if (is_independent(arr, s)) out.push_back(std::move(s));
    return out;
}

std::vector<IndexTuple> circuits(const ArrangementFamily& arr) {
    std::vector<IndexTuple> out;
    for (std::size_t size = 2; size <= arr.k() + 1 && size <= arr.n(); ++size) {
        for (const auto& s : combinations(arr.n(), size)) {
            if (subset_rank(arr, s) != size - 1) continue;
            bool minimal = true;
            for (std::size_t drop = 0; drop < size && minimal; ++drop) {
                IndexTuple rest = s;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
                minimal = is_independent(arr, rest);
            }
            if (minimal) out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LinearForm circuit_form(const ArrangementFamily& arr, std::span<const Index> ordered) {
    if (ordered.size() != arr.k() + 1) throw std::invalid_argument("circuit form needs k+1 indices");
    if (subset_rank(arr, ordered) != arr.k()) throw std::invalid_argument("circuit form needs a set of rank k");
    LinearForm f;
    for (std::size_t j = 0; j < ordered.size(); ++j) {
        IndexTuple rest(ordered.begin(), ordered.end());
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        const Rat d = minor(arr, rest);
        f.add(ordered[j], j % 2 == 0 ? d : Rat(-d));
    }
    return f;
}

std::optional<IndexTuple> discriminant_witness(const ArrangementFamily& arr, std::span<const Rat> z) {
    if (z.size() != arr.n()) throw InputError("base point must have " + std::to_string(arr.n()) + " coordinates");
    for (const auto& c : circuits(arr)) {
        // g_c(t) = -z_c for all c in the circuit
        RatMatrix system(c.size(), arr.k());
        RatVector rhs(c.size());
        for (std::size_t r = 0; r < c.size(); ++r) {
            for (std::size_t i = 0; i < arr.k(); ++i) system(r, i) = arr.coefficients()(i, c[r]);
            rhs[r] = -z[c[r]];
        }
        if (solve(system, rhs)) return c;
    }
    return std::nullopt;
}

bool in_discriminant(const ArrangementFamily& arr, std::span<const Rat> z) {
    return discriminant_witness(arr, z).has_value();
}

std::optional<IndexTuple> zero_weight_dense_flat(const ArrangementFamily& arr, std::span<const Rat> weights) {
    if (weights.size() != arr.n()) throw InputError("weight vector length mismatch");

    // Flats of rank < k: closures of independent sets of size < k. The empty
    // flat stands for H_infinity itself.
    std::set<IndexTuple> flats;
    flats.insert(IndexTuple{});
    for (std::size_t size = 1; size < arr.k(); ++size) {
        for (const auto& s : independent_subsets(arr, size)) {
            IndexTuple closure;
            for (Index j = 0; j < arr.n(); ++j) {
                IndexTuple extended = s;
                extended.push_back(j);
                if (contains(s, j) || subset_rank(arr, extended) == size) closure.push_back(j);
            }
            flats.insert(std::move(closure));
        }
    }

    for (const auto& flat : flats) {
        const std::size_t r = subset_rank(arr, flat);
        bool dense = true;
        for (std::size_t drop = 0; drop < flat.size() && dense; ++drop) {
            IndexTuple rest = flat;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
            dense = subset_rank(arr, rest) == r;
        }
        if (!dense) continue;
        Rat outside = 0;
        for (Index j = 0; j < arr.n(); ++j)
            if (!contains(flat, j)) outside += weights[j];
        if (sgn(outside) == 0) return flat;
    }
    return std::nullopt;
}

bool is_unbalanced(const ArrangementFamily& arr, std::span<const Rat> weights) {
    if (weights.size() != arr.n()) throw InputError("weight vector length mismatch");
    bool all_positive = true;
    for (const auto& a : weights) {
        if (sgn(a) == 0) return false;
        all_positive = all_positive && sgn(a) > 0;
    }
    if (all_positive) return true;
    return !zero_weight_dense_flat(arr, weights).has_value();
}

bool is_unbalanced(const ArrangementFamily& arr) {
    return is_unbalanced(arr, arr.weights());
}

bool all_weights_positive(const ArrangementFamily& arr) {
    return std::all_of(arr.weights().begin(), arr.weights().end(), [](const Rat& a) { return sgn(a) > 0; });
}

}  // namespace arrpot
