#include "arrpot/rational.hpp"

#include "arrpot/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace arrpot {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_int(std::string_view s) {
    std::string body(s);
    if (!body.empty() && body.front() == '+') body.erase(0, 1);
    return mpz_class(body, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
        throw InputError("malformed rational '" + std::string(text) + "'");

    mpz_class q = parse_int(den);
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rat r(parse_int(num), q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& value) {
    return value.get_str(10);
}

Rat factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

Rat make_rat(long p, long q) {
    if (q == 0) throw std::domain_error("zero denominator");
    Rat r(p, q);
    if (q < 0) r = Rat(-p, -q);
    r.canonicalize();
    return r;
}

}  // namespace arrpot
