#pragma once

// The three supported valued base fields:
//   RatP(p)        (Q, v_p)
//   RatFun(p)      (F_p(t), v_t)
//   PerfectHull(p) (F_p(t)^(1/p^oo), v_t), values in Z[1/p]

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "valparam/fp_poly.hpp"
#include "valparam/ordgroup.hpp"
#include "valparam/rational.hpp"

namespace valparam {

bool is_prime(std::uint64_t n);

class FieldSpec {
public:
    enum class Kind { RatP, RatFun, PerfectHull };

    /// Throws NotPrime unless p is a prime below 2^31.
    FieldSpec(Kind kind, std::uint64_t p);

    static FieldSpec rat_p(std::uint64_t p) { return FieldSpec(Kind::RatP, p); }
    static FieldSpec rat_fun(std::uint64_t p) { return FieldSpec(Kind::RatFun, p); }
    static FieldSpec perfect_hull(std::uint64_t p) { return FieldSpec(Kind::PerfectHull, p); }

    Kind kind() const { return kind_; }
    Coeff p() const { return p_; }
    /// Whether gamma lies in the value group (Z, or Z[1/p] for the hull).
    bool in_value_group(const Rat& gamma) const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    Kind kind_;
    Coeff p_;
};

std::string to_string(const FieldSpec& f);
/// Accepts "rat_p", "rat_fun", "perfect_hull".
FieldSpec::Kind parse_field_kind(const std::string& kind);
inline std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << to_string(f); }

/// v(a) for a in K: a rational or infinity (exactly when a = 0).
class ValueQ {
public:
    ValueQ() = default;  // infinity
    explicit ValueQ(Rat v) : v_(std::move(v)) {}
    static ValueQ infinity() { return ValueQ(); }

    bool is_infinity() const { return !v_.has_value(); }
    const Rat& value() const { return *v_; }
    ExtScalar to_ext() const { return v_ ? ExtScalar::fin(*v_) : ExtScalar::infinity(); }

    friend bool operator==(const ValueQ& a, const ValueQ& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const ValueQ& a, const ValueQ& b);
    friend ValueQ operator+(const ValueQ& a, const ValueQ& b);

private:
    std::optional<Rat> v_;
};

std::string to_string(const ValueQ& v);

/// Reduced fraction num/den over F_p in s = t^(1/p^level), den monic.
struct SFrac {
    unsigned level = 0;
    FpPoly num;
    FpPoly den;
    friend bool operator==(const SFrac&, const SFrac&) = default;
};

class KElem {
public:
    /// The zero element of the field.
    explicit KElem(const FieldSpec& field);

    static KElem from_int(const FieldSpec& field, long long n);
    static KElem from_rat(const FieldSpec& field, const Rat& r);
    /// t^e (or p^e for RatP); e must lie in the value group.
    static KElem t_power(const FieldSpec& field, const Rat& e);
    /// Builds a normalized element of a function field from a raw fraction.
    static KElem from_fraction(const FieldSpec& field, unsigned level, FpPoly num, FpPoly den);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;

    const Rat& rational() const { return std::get<Rat>(rep_); }
    const SFrac& fraction() const { return std::get<SFrac>(rep_); }

    friend bool operator==(const KElem& a, const KElem& b);

private:
    FieldSpec field_;
    std::variant<Rat, SFrac> rep_;
};

KElem k_add(const KElem& a, const KElem& b);
KElem k_sub(const KElem& a, const KElem& b);
KElem k_neg(const KElem& a);
KElem k_mul(const KElem& a, const KElem& b);
KElem k_div(const KElem& a, const KElem& b);
bool k_eq(const KElem& a, const KElem& b);
KElem k_pow(const KElem& a, long long n);
ValueQ k_val(const KElem& a);

inline KElem operator+(const KElem& a, const KElem& b) { return k_add(a, b); }
inline KElem operator-(const KElem& a, const KElem& b) { return k_sub(a, b); }
inline KElem operator-(const KElem& a) { return k_neg(a); }
inline KElem operator*(const KElem& a, const KElem& b) { return k_mul(a, b); }
inline KElem operator/(const KElem& a, const KElem& b) { return k_div(a, b); }

/// An element of exact valuation gamma. Throws ValueNotInGroup.
KElem element_of_value(const FieldSpec& field, const Rat& gamma);

/// Deterministic pseudorandom element; size_bound limits degrees and
/// valuations of the representation.
KElem sample(const FieldSpec& field, std::uint64_t seed, unsigned size_bound = 3);

std::string to_string(const KElem& a);
inline std::ostream& operator<<(std::ostream& os, const KElem& a) { return os << to_string(a); }

}  // namespace valparam
