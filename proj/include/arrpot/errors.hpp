#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace arrpot {

/// Malformed arrangement file, bad CLI value, or violated input invariant.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The base point lies on the discriminant. Carries the concurrent circuit
/// (0-based indices) when one is known.
class DiscriminantError : public std::runtime_error {
public:
    DiscriminantError(const std::string& what, std::vector<std::size_t> circuit)
        : std::runtime_error(what), circuit_(std::move(circuit)) {}

    const std::vector<std::size_t>& circuit() const noexcept { return circuit_; }

private:
    std::vector<std::size_t> circuit_;
};

/// The weights make the contravariant form degenerate (a dense edge or a
/// subarrangement level has zero weight).
class BalancedWeightsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation hit a vanishing denominator or a surviving logarithm.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace arrpot
