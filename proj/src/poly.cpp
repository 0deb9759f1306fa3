#include "valparam/poly.hpp"

#include <random>

#include "valparam/error.hpp"

namespace valparam {

PolyK::PolyK(const FieldSpec& field) : field_(field) {}

PolyK::PolyK(const FieldSpec& field, std::vector<KElem> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
        if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coefficient over " + to_string(c.field()));
    }
    trim();
}

void PolyK::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyK PolyK::constant(const KElem& c) { return PolyK(c.field(), {c}); }

PolyK PolyK::x(const FieldSpec& field) { return monomial(KElem::from_int(field, 1), 1); }

PolyK PolyK::monomial(const KElem& c, std::size_t n) {
    std::vector<KElem> v(n + 1, KElem(c.field()));
    v[n] = c;
    return PolyK(c.field(), std::move(v));
}

PolyK PolyK::x_minus(const KElem& a) { return PolyK(a.field(), {-a, KElem::from_int(a.field(), 1)}); }

KElem PolyK::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : KElem(field_); }

KElem PolyK::leading() const { return c_.empty() ? KElem(field_) : c_.back(); }

bool PolyK::is_monic() const { return !c_.empty() && c_.back() == KElem::from_int(field_, 1); }

PolyK PolyK::scaled(const KElem& c) const {
    std::vector<KElem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(a * c);
    return PolyK(field_, std::move(v));
}

namespace {

void check_same_field(const PolyK& a, const PolyK& b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorKind::FieldMismatch, to_string(a.field()) + " vs " + to_string(b.field()));
    }
}

}  // namespace

PolyK operator+(const PolyK& a, const PolyK& b) {
    check_same_field(a, b);
    std::vector<KElem> v(std::max(a.c_.size(), b.c_.size()), KElem(a.field_));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < a.c_.size() && i < b.c_.size()) {
            v[i] = a.c_[i] + b.c_[i];
        } else {
            v[i] = i < a.c_.size() ? a.c_[i] : b.c_[i];
        }
    }
    return PolyK(a.field_, std::move(v));
}

PolyK operator-(const PolyK& a) {
    std::vector<KElem> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(-c);
    return PolyK(a.field_, std::move(v));
}

PolyK operator-(const PolyK& a, const PolyK& b) { return a + (-b); }

PolyK operator*(const PolyK& a, const PolyK& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return PolyK(a.field_);
    std::vector<KElem> v(a.c_.size() + b.c_.size() - 1, KElem(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
    }
    return PolyK(a.field_, std::move(v));
}

bool operator==(const PolyK& a, const PolyK& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

PolyK poly_pow(const PolyK& f, unsigned n) {
    PolyK result = PolyK::constant(KElem::from_int(f.field(), 1));
    PolyK base = f;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

std::pair<PolyK, PolyK> euclid_div(const PolyK& f, const PolyK& g) {
    check_same_field(f, g);
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const FieldSpec& field = f.field();
    if (f.degree() < g.degree()) return {PolyK(field), f};

    std::vector<KElem> r = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    std::vector<KElem> q(r.size() - dg, KElem(field));
    const KElem lead_inv = KElem::from_int(field, 1) / g.leading();
    const bool monic = g.is_monic();
    for (std::size_t k = r.size(); k-- > dg;) {
        if (r[k].is_zero()) continue;
        KElem factor = monic ? r[k] : r[k] * lead_inv;
        q[k - dg] = factor;
        for (std::size_t j = 0; j < dg; ++j) {
            if (!gc[j].is_zero()) r[k - dg + j] = r[k - dg + j] - factor * gc[j];
        }
        r[k] = KElem(field);
    }
    r.erase(r.begin() + static_cast<long>(dg), r.end());
    return {PolyK(field, std::move(q)), PolyK(field, std::move(r))};
}

std::vector<PolyK> q_expansion(const PolyK& f, const PolyK& q) {
    check_same_field(f, q);
    if (!q.is_monic()) throw Error(ErrorKind::NotMonic, to_string(q) + " is not monic");
    if (q.degree() < 1) throw Error(ErrorKind::InvalidArgument, "q-expansion needs deg q >= 1");
    std::vector<PolyK> parts;
    PolyK rest = f;
    while (!rest.is_zero()) {
        auto [quot, rem] = euclid_div(rest, q);
        parts.push_back(std::move(rem));
        rest = std::move(quot);
    }
    return parts;
}

PolyK reassemble(const std::vector<PolyK>& parts, const PolyK& q) {
    PolyK acc(q.field());
    for (std::size_t i = parts.size(); i-- > 0;) acc = acc * q + parts[i];
    return acc;
}

std::vector<KElem> taylor_at(const PolyK& f, const KElem& a) {
    if (f.is_zero()) return {KElem(f.field())};
    std::vector<KElem> rest = f.coeffs();
    std::vector<KElem> out;
    out.reserve(rest.size());
    while (!rest.empty()) {
        // Synthetic division of rest by (x - a).
        std::vector<KElem> quot(rest.size() - 1, KElem(f.field()));
        KElem carry = rest.back();
        for (std::size_t k = rest.size() - 1; k-- > 0;) {
            quot[k] = carry;
            carry = rest[k] + (carry.is_zero() ? KElem(f.field()) : a * carry);
        }
        out.push_back(carry);
        rest = std::move(quot);
    }
    return out;
}

KElem poly_eval(const PolyK& f, const KElem& a) {
    KElem acc(f.field());
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i];
    return acc;
}

PolyK hasse_derivative(const PolyK& f, unsigned l) {
    const auto& c = f.coeffs();
    if (c.size() <= l) return PolyK(f.field());
    std::vector<KElem> v;
    v.reserve(c.size() - l);
    for (std::size_t n = l; n < c.size(); ++n) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, l);
        v.push_back(c[n].is_zero() ? c[n] : KElem::from_rat(f.field(), Rat(binom)) * c[n]);
    }
    return PolyK(f.field(), std::move(v));
}

PolyK sample_poly(const FieldSpec& field, std::uint64_t seed, unsigned degree, unsigned size_bound) {
    std::mt19937_64 rng(seed ^ 0xA24BAED4963EE407ULL);
    std::vector<KElem> v;
    v.reserve(degree + 1);
    for (unsigned i = 0; i <= degree; ++i) v.push_back(sample(field, rng(), size_bound));
    while (v.back().is_zero()) v.back() = sample(field, rng(), size_bound);
    return PolyK(field, std::move(v));
}

std::string to_string(const PolyK& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        std::string coef = to_string(c[i]);
        bool negative = false;
        if (coef.front() == '-' && coef.find(' ') == std::string::npos) {
            negative = true;
            coef.erase(0, 1);
        }
        if (coef.find(' ') != std::string::npos || coef.front() == '(') coef = "(" + coef + ")";

        std::string term;
        if (i == 0) {
            term = coef;
        } else {
            std::string xpow = i == 1 ? "x" : "x^" + std::to_string(i);
            term = coef == "1" ? xpow : coef + "*" + xpow;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

}  // namespace valparam
