#pragma once

#include "arrpot/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>

namespace arrpot {

/// Linear form sum_i c_i z_i in the base-point coordinates (0-based indices).
/// Zero coefficients are never stored.
class LinearForm {
public:
    LinearForm() = default;

    static LinearForm variable(std::size_t index, Rat coefficient = 1);

    void add(std::size_t index, const Rat& coefficient);
    Rat coefficient(std::size_t index) const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::map<std::size_t, Rat>& terms() const noexcept { return coeffs_; }

    Rat evaluate(std::span<const Rat> z) const;

    /// Splits the form as scale * primitive where the primitive form has
    /// leading (lowest-index) coefficient 1. Throws on the zero form.
    std::pair<Rat, LinearForm> normalized() const;

    LinearForm& operator+=(const LinearForm& other);
    LinearForm& operator*=(const Rat& s);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator*(const Rat& s, LinearForm a) { return a *= s; }
    friend LinearForm operator-(const LinearForm& a) { return Rat(-1) * a; }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.coeffs_ < b.coeffs_; }

    /// "z_1 + z_3 - z_4" with 1-based variable names.
    std::string to_string() const;
    /// "z_{1} + z_{3} - z_{4}"
    std::string to_latex() const;
    /// "(linform (1 1) (3 1) (4 -1))" with 1-based indices.
    std::string to_sexpr() const;

private:
    std::map<std::size_t, Rat> coeffs_;
};

}  // namespace arrpot
