#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arrpot {

/// Exact rational number. Always kept in canonical form (reduced, positive
/// denominator) by the helpers below and by GMP arithmetic.
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

/// Parses "p", "-p", "p/q". Throws InputError on malformed text or q == 0.
Rat parse_rat(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

Rat factorial(unsigned n);

/// p/q reduced; the raw two-argument mpq_class constructor does not
/// canonicalize. Throws std::domain_error when q == 0.
Rat make_rat(long p, long q);

}  // namespace arrpot
