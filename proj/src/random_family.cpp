#include "arrpot/random_family.hpp"

#include <random>
#include <stdexcept>

namespace arrpot {

namespace {

// std::uniform_int_distribution is implementation defined; this keeps the
// draws identical across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

BasePoint draw_base_point(const ArrangementFamily& arr, std::mt19937_64& rng, const RandomOptions& options) {
    for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
        BasePoint z;
        for (std::size_t j = 0; j < arr.n(); ++j) z.emplace_back(draw(rng, -options.z_bound, options.z_bound));
        if (!in_discriminant(arr, z)) return z;
    }
    throw std::runtime_error("no base point off the discriminant found");
}

}  // namespace

RandomInstance random_family(std::uint64_t seed, std::size_t k, std::size_t n, const RandomOptions& options) {
    if (k < 1 || n <= k) throw std::invalid_argument("random family needs 1 <= k < n");
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; attempt < options.max_attempts; ++attempt) {
        RatMatrix b(k, n);
        bool zero_column = false;
        for (std::size_t j = 0; j < n; ++j) {
            bool nonzero = false;
            for (std::size_t i = 0; i < k; ++i) {
                b(i, j) = draw(rng, -options.coefficient_bound, options.coefficient_bound);
                nonzero = nonzero || sgn(b(i, j)) != 0;
            }
            zero_column = zero_column || !nonzero;
        }
        if (zero_column || rank(b) < k) continue;

        RatVector weights;
        for (std::size_t j = 0; j < n; ++j) {
            const long num = draw(rng, 1, 5);
            Rat a = make_rat(num, draw(rng, 1, 3));
            if (options.signed_weights && draw(rng, 0, 1) == 1) a = -a;
            weights.push_back(a);
        }
        ArrangementFamily arr(std::move(b), std::move(weights));
        BasePoint z = draw_base_point(arr, rng, options);
        return {std::move(arr), std::move(z)};
    }
    throw std::runtime_error("no spanning coefficient matrix found");
}

BasePoint random_base_point(const ArrangementFamily& arr, std::uint64_t seed, const RandomOptions& options) {
    std::mt19937_64 rng(seed);
    return draw_base_point(arr, rng, options);
}

std::pair<std::size_t, std::size_t> random_shape(std::uint64_t seed) {
    const std::size_t k = 1 + seed % 3;
    return {k, k + 1 + (seed / 3) % 4};
}

}  // namespace arrpot
