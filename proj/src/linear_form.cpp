#include "arrpot/linear_form.hpp"

#include <stdexcept>

namespace arrpot {

namespace {

std::string render(const std::map<std::size_t, Rat>& coeffs, bool latex) {
    if (coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [index, c] : coeffs) {
        const bool negative = sgn(c) < 0;
        const Rat magnitude = abs(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (magnitude != 1) {
            if (latex && magnitude.get_den() != 1)
                out += "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
            else
                out += to_string(magnitude);
            if (!latex) out += "*";
        }
        const std::string name = std::to_string(index + 1);
        out += latex ? "z_{" + name + "}" : "z_" + name;
        first = false;
    }
    return out;
}

}  // namespace

LinearForm LinearForm::variable(std::size_t index, Rat coefficient) {
    LinearForm f;
    f.add(index, coefficient);
    return f;
}

void LinearForm::add(std::size_t index, const Rat& coefficient) {
    if (sgn(coefficient) == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(index, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (sgn(it->second) == 0) coeffs_.erase(it);
}

Rat LinearForm::coefficient(std::size_t index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat LinearForm::evaluate(std::span<const Rat> z) const {
    Rat value = 0;
    for (const auto& [index, c] : coeffs_) {
        if (index >= z.size()) throw std::out_of_range("linear form refers to z_" + std::to_string(index + 1));
        value += c * z[index];
    }
    return value;
}

std::pair<Rat, LinearForm> LinearForm::normalized() const {
    if (coeffs_.empty()) throw std::domain_error("cannot normalize the zero linear form");
    const Rat lead = coeffs_.begin()->second;
    LinearForm primitive = *this;
    primitive *= 1 / lead;
    return {lead, std::move(primitive)};
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
    for (const auto& [index, c] : other.coeffs_) add(index, c);
    return *this;
}

LinearForm& LinearForm::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& entry : coeffs_) entry.second *= s;
    return *this;
}

std::string LinearForm::to_string() const { return render(coeffs_, false); }

std::string LinearForm::to_latex() const { return render(coeffs_, true); }

std::string LinearForm::to_sexpr() const {
    std::string out = "(linform";
    for (const auto& [index, c] : coeffs_) out += " (" + std::to_string(index + 1) + " " + arrpot::to_string(c) + ")";
    return out + ")";
}

}  // namespace arrpot
