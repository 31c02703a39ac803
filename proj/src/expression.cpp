#include "arrpot/expression.hpp"

#include "arrpot/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrpot {

namespace {

Rat pow_int(const Rat& base, int exponent) {
    Rat result = 1;
    const Rat factor = exponent >= 0 ? base : Rat(1 / base);
    for (int i = 0; i < std::abs(exponent); ++i) result *= factor;
    return result;
}

// Multiplies coefficient and powers by form^exponent, normalizing the form.
void absorb_power(Rat& coeff, std::map<LinearForm, int>& powers, const LinearForm& form, int exponent) {
    if (exponent == 0) return;
    auto [scale, primitive] = form.normalized();
    coeff *= pow_int(scale, exponent);
    auto [it, inserted] = powers.try_emplace(std::move(primitive), exponent);
    if (inserted) return;
    it->second += exponent;
    if (it->second == 0) powers.erase(it);
}

std::string latex_coefficient(const Rat& magnitude) {
    if (magnitude.get_den() == 1) return magnitude.get_num().get_str();
    return "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
}

}  // namespace

PotentialExpr PotentialExpr::constant(const Rat& c) {
    PotentialExpr e;
    e.add_term(Monomial{}, c);
    return e;
}

PotentialExpr PotentialExpr::term(Rat c, const std::vector<std::pair<LinearForm, int>>& factors,
                                  const std::optional<LinearForm>& log) {
    Monomial m;
    for (const auto& [form, exponent] : factors) {
        if (form.is_zero()) {
            if (exponent > 0) return {};
            throw std::domain_error("negative power of the zero form");
        }
        absorb_power(c, m.powers, form, exponent);
    }
    if (log) {
        if (log->is_zero()) throw std::domain_error("logarithm of the zero form");
        m.log = *log;
    }
    PotentialExpr e;
    e.add_term(m, c);
    return e;
}

void PotentialExpr::add_term(const Monomial& m, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

bool PotentialExpr::is_constant() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.powers.empty() && !t.first.log; });
}

bool PotentialExpr::has_log() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.log.has_value(); });
}

Rat PotentialExpr::constant_value() const {
    if (!is_constant()) throw std::logic_error("expression depends on z");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::set<Index> PotentialExpr::support() const {
    std::set<Index> vars;
    for (const auto& [m, c] : terms_) {
        for (const auto& [form, n] : m.powers)
            for (const auto& entry : form.terms()) vars.insert(entry.first);
        if (m.log)
            for (const auto& entry : m.log->terms()) vars.insert(entry.first);
    }
    return vars;
}

PotentialExpr& PotentialExpr::operator+=(const PotentialExpr& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

PotentialExpr& PotentialExpr::operator-=(const PotentialExpr& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

PotentialExpr& PotentialExpr::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& entry : terms_) entry.second *= s;
    return *this;
}

PotentialExpr operator*(const PotentialExpr& a, const PotentialExpr& b) {
    PotentialExpr product;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.log && mb.log) throw std::domain_error("product would carry two logarithms");
            Monomial m = ma;
            Rat c = ca * cb;
            for (const auto& [form, n] : mb.powers) absorb_power(c, m.powers, form, n);
            if (mb.log) m.log = mb.log;
            product.add_term(m, c);
        }
    return product;
}

std::string PotentialExpr::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;

        const Rat magnitude = abs(c);
        const bool bare = m.powers.empty() && !m.log;
        if (magnitude != 1 || bare) out += latex_coefficient(magnitude);
        if (m.log) out += "\\ln\\left(" + m.log->to_latex() + "\\right)";
        for (const auto& [form, n] : m.powers) {
            out += "\\left(" + form.to_latex() + "\\right)";
            if (n != 1) out += "^{" + std::to_string(n) + "}";
        }
    }
    return out;
}

std::string PotentialExpr::to_sexpr() const {
    std::string out = "(sum";
    for (const auto& [m, c] : terms_) {
        out += " (term " + to_string(c);
        for (const auto& [form, n] : m.powers) out += " (" + form.to_sexpr() + " " + std::to_string(n) + ")";
        if (m.log) out += " (log " + m.log->to_sexpr() + ")";
        out += ")";
    }
    return out + ")";
}

PotentialExpr differentiate(const PotentialExpr& expr, Index var) {
    PotentialExpr result;
    for (const auto& [m, c] : expr.terms()) {
        for (const auto& [form, n] : m.powers) {
            const Rat d = form.coefficient(var);
            if (sgn(d) == 0) continue;
            Monomial next = m;
            if (n == 1) next.powers.erase(form);
            else next.powers[form] = n - 1;
            result.add_term(next, c * n * d);
        }
        if (m.log) {
            const Rat d = m.log->coefficient(var);
            if (sgn(d) == 0) continue;
            Monomial next = m;
            next.log.reset();
            Rat coeff = c * d;
            absorb_power(coeff, next.powers, *m.log, -1);
            result.add_term(next, coeff);
        }
    }
    return result;
}

PotentialExpr differentiate(const PotentialExpr& expr, std::span<const Index> vars) {
    PotentialExpr current = expr;
    for (Index v : vars) current = differentiate(current, v);
    return current;
}

Rat evaluate(const PotentialExpr& expr, std::span<const Rat> z) {
    Rat total = 0;
    for (const auto& [m, c] : expr.terms()) {
        if (m.log) throw EvaluationError("cannot evaluate ln(" + m.log->to_string() + ") exactly");
        Rat value = c;
        for (const auto& [form, n] : m.powers) {
            const Rat base = form.evaluate(z);
            if (sgn(base) == 0) {
                if (n < 0) throw EvaluationError("pole: " + form.to_string() + " vanishes at the base point");
                value = 0;
                break;
            }
            value *= pow_int(base, n);
        }
        total += value;
    }
    return total;
}

DerivativeCache::DerivativeCache(const PotentialExpr& expr) {
    for (const auto& [m, c] : expr.terms()) {
        PotentialExpr single;
        single.add_term(m, c);
        Chunk chunk;
        chunk.support = single.support();
        chunk.cache.emplace(IndexTuple{}, std::move(single));
        chunks_.push_back(std::move(chunk));
    }
}

bool DerivativeCache::covers(const Chunk& chunk, const IndexTuple& sorted_vars) {
    return std::all_of(sorted_vars.begin(), sorted_vars.end(), [&](Index v) { return chunk.support.count(v) > 0; });
}

const PotentialExpr& DerivativeCache::chunk_derivative(Chunk& chunk, const IndexTuple& sorted_vars) {
    if (auto it = chunk.cache.find(sorted_vars); it != chunk.cache.end()) return it->second;
    IndexTuple parent_vars(sorted_vars.begin(), sorted_vars.end() - 1);
    PotentialExpr d = differentiate(chunk_derivative(chunk, parent_vars), sorted_vars.back());
    return chunk.cache.emplace(sorted_vars, std::move(d)).first->second;
}

PotentialExpr DerivativeCache::derivative(IndexTuple vars) {
    std::sort(vars.begin(), vars.end());
    PotentialExpr total;
    for (auto& chunk : chunks_)
        if (covers(chunk, vars)) total += chunk_derivative(chunk, vars);
    return total;
}

Rat DerivativeCache::value(IndexTuple vars, std::span<const Rat> z) {
    std::sort(vars.begin(), vars.end());
    Rat total = 0;
    for (auto& chunk : chunks_)
        if (covers(chunk, vars)) total += evaluate(chunk_derivative(chunk, vars), z);
    return total;
}

}  // namespace arrpot
