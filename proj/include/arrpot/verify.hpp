#pragma once

#include "arrpot/arrangement.hpp"

#include <string>
#include <utility>
#include <vector>

namespace arrpot {

struct CheckFailure {
    /// name -> value, enough to reproduce the instance.
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string name) : identity(std::move(name)) {}

    std::string identity;
    std::size_t instances = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

struct VerifyReport {
    std::size_t mu = 0;
    std::vector<IndexTuple> basis;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(const std::string& identity) const;
};

/// Runs every identity at one base point. Preconditions are checked first:
/// throws DiscriminantError if z is on the discriminant and
/// BalancedWeightsError if the weights are balanced. Failed identities are
/// report entries, not exceptions.
VerifyReport verify(const ArrangementFamily& arr, const BasePoint& z);

}  // namespace arrpot
