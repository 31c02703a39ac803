#include "arrpot/flag_space.hpp"

#include "arrpot/errors.hpp"

#include <set>

namespace arrpot {

void FlagVector::add(const IndexTuple& sorted_key, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = coords_.try_emplace(sorted_key, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) coords_.erase(it);
}

Rat FlagVector::coefficient(const IndexTuple& sorted_key) const {
    auto it = coords_.find(sorted_key);
    return it == coords_.end() ? Rat(0) : it->second;
}

FlagVector& FlagVector::operator+=(const FlagVector& other) {
    for (const auto& [key, c] : other.coords_) add(key, c);
    return *this;
}

FlagVector& FlagVector::operator-=(const FlagVector& other) {
    for (const auto& [key, c] : other.coords_) add(key, -c);
    return *this;
}

FlagVector& FlagVector::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        coords_.clear();
        return *this;
    }
    for (auto& entry : coords_) entry.second *= s;
    return *this;
}

std::string FlagVector::to_string() const {
    if (coords_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : coords_) {
        if (!first) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        const Rat magnitude = abs(c);
        if (magnitude != 1) out += arrpot::to_string(magnitude) + "*";
        out += "F[" + format_tuple(key) + "]";
        first = false;
    }
    return out;
}

void add_basic(FlagVector& target, const ArrangementFamily& arr, const IndexTuple& ordered, const Rat& c) {
    auto [sign, sorted] = sort_with_sign(ordered);
    if (sign == 0 || !is_independent(arr, sorted)) return;
    target.add(sorted, sign > 0 ? c : Rat(-c));
}

FlagVector basic(const ArrangementFamily& arr, const IndexTuple& ordered) {
    if (ordered.size() != arr.k()) throw std::invalid_argument("basic vector needs k indices");
    FlagVector v;
    add_basic(v, arr, ordered, 1);
    return v;
}

Rat contravariant(const ArrangementFamily& arr, const FlagVector& u, const FlagVector& v) {
    const auto& small = u.size() <= v.size() ? u : v;
    const auto& large = u.size() <= v.size() ? v : u;
    Rat sum = 0;
    for (const auto& [key, c] : small.terms()) {
        const auto it = large.terms().find(key);
        if (it == large.terms().end()) continue;
        Rat product = c * it->second;
        for (Index i : key) product *= arr.weight(i);
        sum += product;
    }
    return sum;
}

std::vector<FlagVector> complement_generators(const ArrangementFamily& arr) {
    std::vector<FlagVector> gens;
    for (const auto& s : independent_subsets(arr, arr.k() - 1)) {
        FlagVector g;
        for (Index j = 0; j < arr.n(); ++j) {
            IndexTuple tuple{j};
            tuple.insert(tuple.end(), s.begin(), s.end());
            add_basic(g, arr, tuple, 1);
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

std::size_t span_rank(const std::vector<FlagVector>& vectors) {
    std::set<IndexTuple> keys;
    for (const auto& v : vectors)
        for (const auto& entry : v.terms()) keys.insert(entry.first);
    const std::vector<IndexTuple> index(keys.begin(), keys.end());
    RatMatrix m(index.size(), vectors.size());
    for (std::size_t r = 0; r < index.size(); ++r)
        for (std::size_t c = 0; c < vectors.size(); ++c) m(r, c) = vectors[c].coefficient(index[r]);
    return rank(m);
}

FlagVector project_oracle(const ArrangementFamily& arr, const FlagVector& f) {
    const auto gens = complement_generators(arr);
    RatMatrix gram(gens.size(), gens.size());
    RatVector rhs(gens.size());
    for (std::size_t t = 0; t < gens.size(); ++t) {
        for (std::size_t s = t; s < gens.size(); ++s) {
            gram(t, s) = contravariant(arr, gens[s], gens[t]);
            gram(s, t) = gram(t, s);
        }
        rhs[t] = contravariant(arr, f, gens[t]);
    }
    if (rank(gram) != span_rank(gens))
        throw BalancedWeightsError("contravariant form is degenerate on the complement of Sing");
    const auto c = solve(gram, rhs);
    if (!c) throw BalancedWeightsError("projection system is inconsistent");

    FlagVector result = f;
    for (std::size_t s = 0; s < gens.size(); ++s) result -= (*c)[s] * gens[s];
    return result;
}

std::size_t sing_dimension(const ArrangementFamily& arr) {
    return independent_subsets(arr, arr.k()).size() - span_rank(complement_generators(arr));
}

}  // namespace arrpot
