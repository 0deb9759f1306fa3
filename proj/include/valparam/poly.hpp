#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valparam/basefield.hpp"

namespace valparam {

// Dense polynomial over K, lowest degree first, trimmed.
class PolyK {
public:
    /// The zero polynomial.
    explicit PolyK(const FieldSpec& field);
    PolyK(const FieldSpec& field, std::vector<KElem> coeffs);

    static PolyK constant(const KElem& c);
    static PolyK x(const FieldSpec& field);
    /// c * x^n
    static PolyK monomial(const KElem& c, std::size_t n);
    /// x - a
    static PolyK x_minus(const KElem& a);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<KElem>& coeffs() const { return c_; }
    KElem coeff(std::size_t i) const;
    KElem leading() const;
    bool is_monic() const;

    PolyK scaled(const KElem& c) const;

    friend PolyK operator+(const PolyK& a, const PolyK& b);
    friend PolyK operator-(const PolyK& a, const PolyK& b);
    friend PolyK operator-(const PolyK& a);
    friend PolyK operator*(const PolyK& a, const PolyK& b);
    friend bool operator==(const PolyK& a, const PolyK& b);

private:
    void trim();
    FieldSpec field_;
    std::vector<KElem> c_;
};

PolyK poly_pow(const PolyK& f, unsigned n);

/// f = q*g + r with deg r < deg g.
std::pair<PolyK, PolyK> euclid_div(const PolyK& f, const PolyK& g);

/// [f_0, ..., f_r] with f = sum f_i q^i and deg f_i < deg q; empty for f = 0.
std::vector<PolyK> q_expansion(const PolyK& f, const PolyK& q);
/// sum parts[i] * q^i
PolyK reassemble(const std::vector<PolyK>& parts, const PolyK& q);

/// Coefficients of f in powers of (x - a), by repeated synthetic division.
/// The zero polynomial gives [0].
std::vector<KElem> taylor_at(const PolyK& f, const KElem& a);

KElem poly_eval(const PolyK& f, const KElem& a);

/// l-th Hasse derivative: sum_n C(n, l) c_n x^(n-l).
PolyK hasse_derivative(const PolyK& f, unsigned l);

/// Pseudorandom polynomial of degree exactly `degree` with sampled
/// coefficients.
PolyK sample_poly(const FieldSpec& field, std::uint64_t seed, unsigned degree, unsigned size_bound = 3);

// Literal syntax: integers, t, x, + - * /, ^ with integer exponents and
// t^(a/b) for rational powers of t, parentheses. Division only by nonzero
// constants.
PolyK parse_poly(const FieldSpec& field, std::string_view text);
KElem parse_elem(const FieldSpec& field, std::string_view text);

std::string to_string(const PolyK& f);
inline std::ostream& operator<<(std::ostream& os, const PolyK& f) { return os << to_string(f); }

}  // namespace valparam
