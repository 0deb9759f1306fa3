#include "valparam/fp_poly.hpp"

#include <algorithm>

#include "valparam/error.hpp"

namespace valparam {

Coeff fp_add(Coeff a, Coeff b, Coeff p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Coeff>(s >= p ? s - p : s);
}

Coeff fp_sub(Coeff a, Coeff b, Coeff p) { return a >= b ? a - b : static_cast<Coeff>(std::uint64_t(a) + p - b); }

Coeff fp_mul(Coeff a, Coeff b, Coeff p) { return static_cast<Coeff>(std::uint64_t(a) * b % p); }

Coeff fp_inv(Coeff a, Coeff p) {
    if (a % p == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in F_p");
    // Extended Euclid on signed 64-bit values.
    long long r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return fp_from_int(s0, p);
}

Coeff fp_from_int(long long v, Coeff p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Coeff>(r);
}

FpPoly::FpPoly(Coeff p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::monomial(Coeff p, Coeff c, std::size_t exponent) {
    std::vector<Coeff> v(exponent + 1, 0);
    v[exponent] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t FpPoly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) return i;
    }
    return 0;
}

bool FpPoly::is_monomial() const { return !c_.empty() && order() + 1 == c_.size(); }

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
    return r;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    const Coeff p = a.p_ ? a.p_ : b.p_;
    std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = fp_add(v[i], b.c_[i], p);
    return FpPoly(p, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    const Coeff p = a.p_ ? a.p_ : b.p_;
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(p);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] != 0) nz.push_back(j);
    }
    std::vector<Coeff> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const Coeff ai = a.c_[i];
        if (ai == 0) continue;
        for (std::size_t j : nz) v[i + j] = fp_add(v[i + j], fp_mul(ai, b.c_[j], p), p);
    }
    return FpPoly(p, std::move(v));
}

FpPoly FpPoly::scaled(Coeff c) const {
    FpPoly r = *this;
    for (auto& x : r.c_) x = fp_mul(x, c, p_);
    r.trim();
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(leading(), p_));
}

FpPoly FpPoly::shifted_up(std::size_t n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<Coeff> v(n, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::shifted_down(std::size_t n) const {
    if (n == 0 || is_zero()) return *this;
    return FpPoly(p_, std::vector<Coeff>(c_.begin() + static_cast<long>(n), c_.end()));
}

FpPoly FpPoly::expanded(std::size_t factor) const {
    if (factor == 1 || c_.size() <= 1) return *this;
    std::vector<Coeff> v((c_.size() - 1) * factor + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * factor] = c_[i];
    return FpPoly(p_, std::move(v));
}

bool FpPoly::exponents_divisible_by(std::size_t d) const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0 && i % d != 0) return false;
    }
    return true;
}

FpPoly FpPoly::compressed(std::size_t d) const {
    if (d == 1 || is_zero()) return *this;
    std::vector<Coeff> v((c_.size() - 1) / d + 1, 0);
    for (std::size_t i = 0; i < c_.size(); i += d) v[i / d] = c_[i];
    return FpPoly(p_, std::move(v));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Coeff p = b.p_;
    if (a.degree() < b.degree()) return {FpPoly::zero(p), a};
    std::vector<Coeff> r = a.c_;
    std::vector<Coeff> q(a.c_.size() - b.c_.size() + 1, 0);
    const Coeff inv = fp_inv(b.leading(), p);
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = r.size(); k-- > db;) {
        Coeff lead = r[k];
        if (lead == 0) continue;
        Coeff factor = fp_mul(lead, inv, p);
        q[k - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) {
            if (b.c_[j] != 0) r[k - db + j] = fp_sub(r[k - db + j], fp_mul(factor, b.c_[j], p), p);
        }
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly FpPoly::gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

}  // namespace valparam
