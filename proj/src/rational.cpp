#include "valparam/rational.hpp"

#include <cctype>

#include "valparam/error.hpp"

namespace valparam {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
    }
    Int n(std::string(num), 10);
    Int d(std::string(den), 10);
    if (negative) n = -n;
    return make_rat(n, d);
}

std::string to_string(const Rat& r) { return r.get_str(10); }

std::string to_string(const Int& z) { return z.get_str(10); }

}  // namespace valparam
