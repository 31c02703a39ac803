#pragma once

#include "arrpot/arrangement.hpp"
#include "arrpot/flag_space.hpp"

#include <initializer_list>
#include <random>
#include <string>

namespace arrpot::testing {

// 1-based indices in tests read like the math.
inline IndexTuple idx(std::initializer_list<int> one_based) {
    IndexTuple out;
    for (int i : one_based) out.push_back(static_cast<Index>(i - 1));
    return out;
}

inline LinearForm zform(std::initializer_list<std::pair<int, int>> terms) {
    LinearForm f;
    for (auto [i, c] : terms) f.add(static_cast<Index>(i - 1), c);
    return f;
}

inline ArrangementFamily fig1(RatVector weights = {1, 1, 1, 1}) {
    return ArrangementFamily(RatMatrix::from_columns(2, {{0, 1}, {0, 1}, {1, 0}, {1, 1}}), std::move(weights));
}

inline ArrangementFamily collinear(std::size_t n, RatVector weights = {}) {
    if (weights.empty()) weights.assign(n, 1);
    std::vector<RatVector> cols(n, RatVector{1});
    return ArrangementFamily(RatMatrix::from_columns(1, cols), std::move(weights));
}

inline FlagVector F(const ArrangementFamily& arr, std::initializer_list<int> one_based) {
    return basic(arr, idx(one_based));
}

inline std::string vector_text(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out + ")";
}

// Wedge of two degree-one vectors, expanded bilinearly.
inline FlagVector wedge(const ArrangementFamily& arr, const std::vector<std::pair<int, Rat>>& u,
                        const std::vector<std::pair<int, Rat>>& v) {
    FlagVector out;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v) add_basic(out, arr, idx({i, j}), a * b);
    return out;
}

// Positive weights p/q, 1 <= p <= 9, 1 <= q <= 4.
inline RatVector random_weights(std::mt19937_64& rng, std::size_t n) {
    RatVector w;
    for (std::size_t i = 0; i < n; ++i) {
        w.push_back(make_rat(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 4)));
    }
    return w;
}

inline BasePoint random_point(std::mt19937_64& rng, const ArrangementFamily& arr) {
    for (;;) {
        BasePoint z;
        for (std::size_t j = 0; j < arr.n(); ++j) {
            z.push_back(make_rat(static_cast<long>(rng() % 21) - 10, static_cast<long>(1 + rng() % 3)));
        }
        if (!in_discriminant(arr, z)) return z;
    }
}

}  // namespace arrpot::testing
