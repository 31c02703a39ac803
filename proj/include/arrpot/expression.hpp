#pragma once

#include "arrpot/linear_form.hpp"
#include "arrpot/subsets.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arrpot {

/// Product part of a term: prod L_i^{n_i} * ln(L_0)^{0|1}.
///
/// Power bases are stored primitive (leading coefficient 1, the scale moved
/// into the term coefficient), so proportional bases merge. The log argument
/// is stored exactly as constructed: ln(cL) and ln(L) differ by a constant
/// that no derivative sees, and they are never merged.
struct Monomial {
    std::map<LinearForm, int> powers;
    std::optional<LinearForm> log;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.powers != b.powers) return a.powers < b.powers;
        return a.log < b.log;
    }
};

/// Finite sum of c * prod L_i^{n_i} * ln(L_0)^eps with exact rational c,
/// integer (possibly negative) exponents, and linear forms L in z.
/// Like terms are merged on insertion; zero terms are dropped.
class PotentialExpr {
public:
    using TermMap = std::map<Monomial, Rat>;

    PotentialExpr() = default;

    static PotentialExpr constant(const Rat& c);
    /// c * prod factors[i].first^factors[i].second * ln(log)  (log optional).
    static PotentialExpr term(Rat c, const std::vector<std::pair<LinearForm, int>>& factors,
                              const std::optional<LinearForm>& log = std::nullopt);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// No z dependence at all: every term has no powers and no log.
    bool is_constant() const;
    bool has_log() const;
    /// Value of a constant expression; throws std::logic_error otherwise.
    Rat constant_value() const;
    /// z indices the expression depends on.
    std::set<Index> support() const;

    void add_term(const Monomial& m, const Rat& c);

    PotentialExpr& operator+=(const PotentialExpr& other);
    PotentialExpr& operator-=(const PotentialExpr& other);
    PotentialExpr& operator*=(const Rat& s);
    friend PotentialExpr operator+(PotentialExpr a, const PotentialExpr& b) { return a += b; }
    friend PotentialExpr operator-(PotentialExpr a, const PotentialExpr& b) { return a -= b; }
    friend PotentialExpr operator*(const Rat& s, PotentialExpr a) { return a *= s; }
    /// Product of two log-free-or-single-log expressions (at most one log per term).
    friend PotentialExpr operator*(const PotentialExpr& a, const PotentialExpr& b);

    friend bool operator==(const PotentialExpr&, const PotentialExpr&) = default;

    std::string to_latex() const;
    /// (sum (term c ((linform ...) n) ... (log (linform ...))) ...)
    std::string to_sexpr() const;

private:
    TermMap terms_;
};

/// Exact partial derivative with respect to z_var.
PotentialExpr differentiate(const PotentialExpr& expr, Index var);

/// Repeated differentiation, in the given order.
PotentialExpr differentiate(const PotentialExpr& expr, std::span<const Index> vars);

/// Exact value at z. Throws EvaluationError if a log survives or a form with
/// a negative exponent vanishes at z (the message names the form).
Rat evaluate(const PotentialExpr& expr, std::span<const Rat> z);

/// Memoized mixed partials of a fixed expression. Each term is kept
/// separately with its own cache keyed by the sorted multiset of variables,
/// and a term only receives queries whose variables it depends on.
/// Not thread-safe; use one cache per thread.
class DerivativeCache {
public:
    explicit DerivativeCache(const PotentialExpr& expr);

    PotentialExpr derivative(IndexTuple vars);
    Rat value(IndexTuple vars, std::span<const Rat> z);

private:
    struct Chunk {
        std::set<Index> support;
        std::map<IndexTuple, PotentialExpr> cache;
    };
    const PotentialExpr& chunk_derivative(Chunk& chunk, const IndexTuple& sorted_vars);
    static bool covers(const Chunk& chunk, const IndexTuple& sorted_vars);

    std::vector<Chunk> chunks_;
};

}  // namespace arrpot
