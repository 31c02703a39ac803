#include "arrpot/residue_algebra.hpp"

#include "arrpot/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrpot {

namespace {

IndexTuple without_value(const IndexTuple& tuple, Index value) {
    IndexTuple rest;
    for (Index i : tuple)
        if (i != value) rest.push_back(i);
    return rest;
}

IndexTuple prepend(Index j, const IndexTuple& tuple) {
    IndexTuple out{j};
    out.insert(out.end(), tuple.begin(), tuple.end());
    return out;
}

int sign_of_k(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

ResidueAlgebra::ResidueAlgebra(ArrangementFamily arr, BasePoint z) : arr_(std::move(arr)), z_(std::move(z)) {
    if (z_.size() != arr_.n()) throw InputError("base point has the wrong number of coordinates");
    if (auto witness = discriminant_witness(arr_, z_))
        throw DiscriminantError("base point lies on the discriminant: circuit {" + format_tuple(*witness) +
                                    "} is concurrent",
                                *witness);

    independent_ = independent_subsets(arr_, arr_.k());
    for (const auto& key : independent_) projected_.push_back(project_oracle(arr_, basic(arr_, key)));

    for (std::size_t i = 0; i < independent_.size(); ++i) {
        basis_vectors_.push_back(projected_[i]);
        if (span_rank(basis_vectors_) < basis_vectors_.size()) {
            basis_vectors_.pop_back();
            continue;
        }
        basis_.push_back(independent_[i]);
    }

    const std::size_t mu = basis_.size();
    RatMatrix b_transposed(mu, independent_.size());
    for (std::size_t b = 0; b < mu; ++b)
        for (std::size_t r = 0; r < independent_.size(); ++r)
            b_transposed(b, r) = basis_vectors_[b].coefficient(independent_[r]);
    const auto pivots = rref(b_transposed).pivot_columns;
    RatMatrix square(mu, mu);
    for (std::size_t r = 0; r < mu; ++r) {
        pivot_keys_.push_back(independent_[pivots[r]]);
        for (std::size_t b = 0; b < mu; ++b) square(r, b) = b_transposed(b, pivots[r]);
    }
    pivot_inverse_ = RatMatrix(mu, mu);
    for (std::size_t c = 0; c < mu; ++c) {
        RatVector unit(mu, 0);
        unit[c] = 1;
        const auto col = solve(square, unit);
        if (!col) throw std::logic_error("Sing basis restriction is singular");
        for (std::size_t r = 0; r < mu; ++r) pivot_inverse_(r, c) = (*col)[r];
    }

    gram_ = RatMatrix(mu, mu);
    const int sign = sign_of_k(arr_.k());
    for (std::size_t b = 0; b < mu; ++b)
        for (std::size_t c = b; c < mu; ++c) {
            gram_(b, c) = sign * contravariant(arr_, basis_vectors_[b], basis_vectors_[c]);
            gram_(c, b) = gram_(b, c);
        }
    operators_.resize(arr_.n());
    basis_operators_.resize(mu);
}

FlagVector ResidueAlgebra::marked_vector(const IndexTuple& ordered) const {
    if (ordered.size() != arr_.k()) throw std::invalid_argument("marked vector needs k indices");
    const auto [sign, sorted] = sort_with_sign(ordered);
    if (sign == 0) return {};
    const auto it = std::lower_bound(independent_.begin(), independent_.end(), sorted);
    if (it == independent_.end() || *it != sorted) return {};
    FlagVector v = projected_[static_cast<std::size_t>(it - independent_.begin())];
    if (sign < 0) v *= -1;
    return v;
}

AlgebraElement ResidueAlgebra::coordinates(const FlagVector& sing_vector) const {
    RatVector restricted;
    for (const auto& key : pivot_keys_) restricted.push_back(sing_vector.coefficient(key));
    AlgebraElement x = pivot_inverse_ * restricted;
    if (this->sing_vector(x) != sing_vector) throw std::logic_error("vector is not in the span of the Sing basis");
    return x;
}

FlagVector ResidueAlgebra::sing_vector(const AlgebraElement& u) const {
    FlagVector v;
    for (std::size_t b = 0; b < u.size(); ++b)
        if (sgn(u[b]) != 0) v += u[b] * basis_vectors_[b];
    return v;
}

AlgebraElement ResidueAlgebra::marked_w(const IndexTuple& ordered) const { return coordinates(marked_vector(ordered)); }

AlgebraElement ResidueAlgebra::monomial_p(const IndexTuple& ordered) const {
    const Rat d = minor(arr_, ordered);
    if (sgn(d) == 0) throw std::invalid_argument("p-monomial of a dependent tuple");
    AlgebraElement w = marked_w(ordered);
    for (auto& x : w) x /= d;
    return w;
}

FlagVector ResidueAlgebra::p_times_w_outside(Index j, const IndexTuple& ordered) const {
    const IndexTuple c = prepend(j, ordered);
    const Rat f = circuit_form(arr_, c).evaluate(z_);
    if (sgn(f) == 0) {
        auto sorted = sort_with_sign(c).second;
        throw DiscriminantError("f_{" + format_tuple(c) + "} vanishes at the base point", sorted);
    }
    FlagVector acc;
    for (std::size_t m = 0; m < c.size(); ++m) {
        IndexTuple rest = c;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
        const Rat a = m % 2 == 0 ? arr_.weight(c[m]) : Rat(-arr_.weight(c[m]));
        acc += a * marked_vector(rest);
    }
    acc *= minor(arr_, ordered) / f;
    return acc;
}

std::optional<IndexTuple> ResidueAlgebra::alternate_subset(Index j, const IndexTuple& rest) const {
    const IndexTuple sorted_rest = sort_with_sign(rest).second;
    for (const auto& t : independent_subsets(arr_, arr_.k() - 1)) {
        if (t == sorted_rest) continue;
        if (sgn(minor(arr_, prepend(j, t))) != 0) return t;
    }
    return std::nullopt;
}

bool ResidueAlgebra::has_alternate_rewrite(Index j, const IndexTuple& ordered) const {
    return contains(ordered, j) && alternate_subset(j, without_value(ordered, j)).has_value();
}

FlagVector ResidueAlgebra::p_times_w(Index j, const IndexTuple& ordered, Rewrite rewrite) const {
    if (ordered.size() != arr_.k()) throw std::invalid_argument("marked element needs k indices");
    if (j >= arr_.n()) throw std::out_of_range("generator index out of range");
    if (sgn(minor(arr_, ordered)) == 0) return {};
    if (!contains(ordered, j)) return p_times_w_outside(j, ordered);

    // p_j = -(1/d_{j,S}) sum_{l != j} d_{l,S} p_l
    IndexTuple s = without_value(ordered, j);
    if (rewrite == Rewrite::Alternate)
        if (auto alt = alternate_subset(j, s)) s = *alt;
    const Rat dj = minor(arr_, prepend(j, s));
    FlagVector acc;
    for (Index l = 0; l < arr_.n(); ++l) {
        if (l == j) continue;
        const Rat dl = minor(arr_, prepend(l, s));
        if (sgn(dl) == 0) continue;
        acc += dl * (contains(ordered, l) ? p_times_w(l, ordered) : p_times_w_outside(l, ordered));
    }
    acc *= -1 / dj;
    return acc;
}

AlgebraElement ResidueAlgebra::multiply_by_p(Index j, const AlgebraElement& u, Rewrite rewrite) const {
    FlagVector acc;
    for (std::size_t b = 0; b < u.size(); ++b)
        if (sgn(u[b]) != 0) acc += u[b] * p_times_w(j, basis_[b], rewrite);
    return coordinates(acc);
}

const RatMatrix& ResidueAlgebra::multiplication_operator(Index j) const {
    auto& slot = operators_.at(j);
    if (!slot) {
        const std::size_t mu = dimension();
        RatMatrix k(mu, mu);
        for (std::size_t b = 0; b < mu; ++b) {
            const AlgebraElement col = coordinates(p_times_w(j, basis_[b]));
            for (std::size_t r = 0; r < mu; ++r) k(r, b) = col[r];
        }
        slot = std::move(k);
    }
    return *slot;
}

const RatMatrix& ResidueAlgebra::basis_operator(std::size_t b) const {
    auto& slot = basis_operators_.at(b);
    if (!slot) {
        RatMatrix m = RatMatrix::identity(dimension());
        for (Index i : basis_[b]) m = m * multiplication_operator(i);
        slot = minor(arr_, basis_[b]) * m;
    }
    return *slot;
}

AlgebraElement ResidueAlgebra::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
    AlgebraElement out(dimension(), 0);
    for (std::size_t b = 0; b < u.size(); ++b) {
        if (sgn(u[b]) == 0) continue;
        const AlgebraElement part = basis_operator(b) * v;
        for (std::size_t r = 0; r < out.size(); ++r) out[r] += u[b] * part[r];
    }
    return out;
}

Rat ResidueAlgebra::residue_pairing(const AlgebraElement& u, const AlgebraElement& v) const {
    const AlgebraElement gv = gram_ * v;
    Rat sum = 0;
    for (std::size_t b = 0; b < u.size(); ++b) sum += u[b] * gv[b];
    return sum;
}

PairingViaP pairing_via_P(const ArrangementFamily& arr, DerivativeCache& p_cache, const IndexTuple& i_ordered,
                          const IndexTuple& l_ordered) {
    IndexTuple vars = i_ordered;
    vars.insert(vars.end(), l_ordered.begin(), l_ordered.end());
    const PotentialExpr raw = p_cache.derivative(vars);
    PairingViaP out;
    out.expression = Rat(sign_of_k(arr.k())) * raw;
    out.z_independent = out.expression.is_constant();
    if (out.z_independent) {
        out.value = out.expression.constant_value();
        out.contravariant = minor(arr, i_ordered) * minor(arr, l_ordered) * raw.constant_value();
    }
    return out;
}

PairingViaP pairing_via_P(const ArrangementFamily& arr, const PotentialExpr& p, const IndexTuple& i_ordered,
                          const IndexTuple& l_ordered) {
    DerivativeCache cache(p);
    return pairing_via_P(arr, cache, i_ordered, l_ordered);
}

Rat triple_via_Q(const ArrangementFamily& arr, DerivativeCache& q_cache, std::span<const Rat> z, Index i0,
                 const IndexTuple& i_ordered, const IndexTuple& l_ordered) {
    IndexTuple vars{i0};
    vars.insert(vars.end(), i_ordered.begin(), i_ordered.end());
    vars.insert(vars.end(), l_ordered.begin(), l_ordered.end());
    return sign_of_k(arr.k()) * q_cache.value(vars, z);
}

Rat triple_via_Q(const ArrangementFamily& arr, const PotentialExpr& q, std::span<const Rat> z, Index i0,
                 const IndexTuple& i_ordered, const IndexTuple& l_ordered) {
    DerivativeCache cache(q);
    return triple_via_Q(arr, cache, z, i0, i_ordered, l_ordered);
}

}  // namespace arrpot
