#pragma once

#include "arrpot/arrangement.hpp"

#include <cstdint>

namespace arrpot {

struct RandomInstance {
    ArrangementFamily arrangement;
    BasePoint base_point;
};

struct RandomOptions {
    /// Weights get a random sign; unbalanced weights are then not guaranteed.
    bool signed_weights = false;
    /// Coefficients are drawn from [-coefficient_bound, coefficient_bound].
    int coefficient_bound = 2;
    /// Base point coordinates are drawn from [-z_bound, z_bound].
    int z_bound = 6;
    unsigned max_attempts = 1000;
};

/// Seeded family: integer columns (resampled until no zero column and the
/// columns span), weights p/q with 1 <= p <= 5, 1 <= q <= 3, and an integer
/// base point resampled off the discriminant. Deterministic per seed.
/// Throws std::runtime_error after max_attempts failed draws.
RandomInstance random_family(std::uint64_t seed, std::size_t k, std::size_t n, const RandomOptions& options = {});

/// Seeded base point off the discriminant for a fixed family.
BasePoint random_base_point(const ArrangementFamily& arr, std::uint64_t seed, const RandomOptions& options = {});

/// Shape used by the randomized suites: k = 1 + seed % 3, n = k + 1 + (seed / 3) % 4.
std::pair<std::size_t, std::size_t> random_shape(std::uint64_t seed);

}  // namespace arrpot
