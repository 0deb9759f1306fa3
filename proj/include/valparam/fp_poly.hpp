#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace valparam {

using Coeff = std::uint32_t;

Coeff fp_add(Coeff a, Coeff b, Coeff p);
Coeff fp_sub(Coeff a, Coeff b, Coeff p);
Coeff fp_mul(Coeff a, Coeff b, Coeff p);
Coeff fp_inv(Coeff a, Coeff p);
/// Reduces a signed integer into [0, p).
Coeff fp_from_int(long long v, Coeff p);

// Dense univariate polynomial over F_p, lowest degree first, trimmed so the
// leading coefficient is nonzero. Multiplication skips zero coefficients, so
// sparse operands of high degree (t^(1/p^k) expansions) stay cheap.
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(Coeff p, std::vector<Coeff> coeffs);

    static FpPoly zero(Coeff p) { return FpPoly(p, {}); }
    static FpPoly constant(Coeff p, Coeff c) { return FpPoly(p, {c}); }
    static FpPoly monomial(Coeff p, Coeff c, std::size_t exponent);

    Coeff prime() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t order() const;
    bool is_monomial() const;
    Coeff leading() const { return c_.empty() ? 0 : c_.back(); }
    Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Coeff>& coeffs() const { return c_; }

    FpPoly operator-() const;
    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

    FpPoly scaled(Coeff c) const;
    FpPoly monic() const;
    /// Multiply by s^n.
    FpPoly shifted_up(std::size_t n) const;
    /// Exact division by s^n; requires n <= order().
    FpPoly shifted_down(std::size_t n) const;
    /// Substitute s -> s^factor.
    FpPoly expanded(std::size_t factor) const;
    /// True when every nonzero exponent is divisible by d.
    bool exponents_divisible_by(std::size_t d) const;
    /// Inverse of expanded(d); requires exponents_divisible_by(d).
    FpPoly compressed(std::size_t d) const;

    static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static FpPoly gcd(const FpPoly& a, const FpPoly& b);

private:
    void trim();
    Coeff p_ = 0;
    std::vector<Coeff> c_;
};

}  // namespace valparam
