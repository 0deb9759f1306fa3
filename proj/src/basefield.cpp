#include "valparam/basefield.hpp"

#include <random>
#include <sstream>

#include "valparam/error.hpp"

namespace valparam {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(0) {
    if (p >= (std::uint64_t(1) << 31) || !is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a supported prime");
    }
    p_ = static_cast<Coeff>(p);
}

namespace {

// k with p^k == n, if any.
std::optional<unsigned> log_p(const Int& n, Coeff p) {
    if (n <= 0) return std::nullopt;
    Int m = n;
    unsigned k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return std::nullopt;
    return k;
}

std::size_t ipow(std::size_t base, unsigned e) {
    std::size_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

bool FieldSpec::in_value_group(const Rat& gamma) const {
    if (kind_ == Kind::PerfectHull) return log_p(gamma.get_den(), p_).has_value();
    return is_integer(gamma);
}

std::string to_string(const FieldSpec& f) {
    switch (f.kind()) {
        case FieldSpec::Kind::RatP: return "rat_p(" + std::to_string(f.p()) + ")";
        case FieldSpec::Kind::RatFun: return "rat_fun(" + std::to_string(f.p()) + ")";
        case FieldSpec::Kind::PerfectHull: return "perfect_hull(" + std::to_string(f.p()) + ")";
    }
    return {};
}

FieldSpec::Kind parse_field_kind(const std::string& kind) {
    if (kind == "rat_p") return FieldSpec::Kind::RatP;
    if (kind == "rat_fun") return FieldSpec::Kind::RatFun;
    if (kind == "perfect_hull") return FieldSpec::Kind::PerfectHull;
    throw Error(ErrorKind::Parse, "unknown field kind '" + kind + "'");
}

std::strong_ordering operator<=>(const ValueQ& a, const ValueQ& b) {
    if (a.is_infinity() || b.is_infinity()) {
        if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
        return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.value(), b.value());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ValueQ operator+(const ValueQ& a, const ValueQ& b) {
    if (a.is_infinity() || b.is_infinity()) return ValueQ::infinity();
    return ValueQ(a.value() + b.value());
}

std::string to_string(const ValueQ& v) { return v.is_infinity() ? "inf" : to_string(v.value()); }

// ---------------------------------------------------------------------------
// Fractions over F_p in s = t^(1/p^level)

namespace {

SFrac normalize(Coeff p, SFrac f) {
    if (f.den.is_zero()) throw Error(ErrorKind::DivisionByZero, "fraction with zero denominator");
    if (f.num.is_zero()) return SFrac{0, FpPoly::zero(p), FpPoly::constant(p, 1)};
    if (f.num.is_monomial() || f.den.is_monomial()) {
        std::size_t e = std::min(f.num.order(), f.den.order());
        f.num = f.num.shifted_down(e);
        f.den = f.den.shifted_down(e);
    } else {
        FpPoly g = FpPoly::gcd(f.num, f.den);
        if (g.degree() > 0) {
            f.num = FpPoly::divmod(f.num, g).first;
            f.den = FpPoly::divmod(f.den, g).first;
        }
    }
    if (f.den.leading() != 1) {
        Coeff inv = fp_inv(f.den.leading(), p);
        f.num = f.num.scaled(inv);
        f.den = f.den.scaled(inv);
    }
    // Over F_p, N(s^p) = N(s)^p, so a reduced fraction in s^p stays reduced
    // after compression and the minimal level is reached greedily.
    while (f.level > 0 && f.num.exponents_divisible_by(p) && f.den.exponents_divisible_by(p)) {
        f.num = f.num.compressed(p);
        f.den = f.den.compressed(p);
        --f.level;
    }
    return f;
}

SFrac lift(const SFrac& f, unsigned level, Coeff p) {
    if (level == f.level) return f;
    std::size_t factor = ipow(p, level - f.level);
    return SFrac{level, f.num.expanded(factor), f.den.expanded(factor)};
}

SFrac frac_add(Coeff p, const SFrac& a0, const SFrac& b0) {
    unsigned level = std::max(a0.level, b0.level);
    SFrac a = lift(a0, level, p);
    SFrac b = lift(b0, level, p);
    if (a.den == b.den) return normalize(p, SFrac{level, a.num + b.num, a.den});
    if (a.den.is_monomial() && b.den.is_monomial()) {
        // Both denominators are s^m (monic): bring to the larger power.
        std::size_t da = a.den.order(), db = b.den.order(), d = std::max(da, db);
        return normalize(p, SFrac{level, a.num.shifted_up(d - da) + b.num.shifted_up(d - db), FpPoly::monomial(p, 1, d)});
    }
    return normalize(p, SFrac{level, a.num * b.den + b.num * a.den, a.den * b.den});
}

SFrac frac_mul(Coeff p, const SFrac& a0, const SFrac& b0) {
    unsigned level = std::max(a0.level, b0.level);
    SFrac a = lift(a0, level, p);
    SFrac b = lift(b0, level, p);
    if (a.den.is_one()) return normalize(p, SFrac{level, a.num * b.num, b.den});
    if (b.den.is_one()) return normalize(p, SFrac{level, a.num * b.num, a.den});
    return normalize(p, SFrac{level, a.num * b.num, a.den * b.den});
}

SFrac frac_inv(Coeff p, const SFrac& a) {
    if (a.num.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in K");
    return normalize(p, SFrac{a.level, a.den, a.num});
}

Rat frac_val(Coeff p, const SFrac& a) {
    Int diff = Int(static_cast<unsigned long>(a.num.order())) - Int(static_cast<unsigned long>(a.den.order()));
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p, a.level);
    return make_rat(diff, scale);
}

Coeff mod_p(const Int& z, Coeff p) { return static_cast<Coeff>(mpz_fdiv_ui(z.get_mpz_t(), p)); }

void check_same_field(const KElem& a, const KElem& b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorKind::FieldMismatch, to_string(a.field()) + " vs " + to_string(b.field()));
    }
}

}  // namespace

KElem::KElem(const FieldSpec& field) : field_(field) {
    if (field.kind() == FieldSpec::Kind::RatP) {
        rep_ = Rat(0);
    } else {
        rep_ = SFrac{0, FpPoly::zero(field.p()), FpPoly::constant(field.p(), 1)};
    }
}

KElem KElem::from_int(const FieldSpec& field, long long n) { return from_rat(field, Rat(static_cast<long>(n))); }

KElem KElem::from_rat(const FieldSpec& field, const Rat& r) {
    KElem e(field);
    if (field.kind() == FieldSpec::Kind::RatP) {
        e.rep_ = r;
        return e;
    }
    const Coeff p = field.p();
    Coeff den = mod_p(r.get_den(), p);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator of " + to_string(r) + " vanishes mod p");
    Coeff c = fp_mul(mod_p(r.get_num(), p), fp_inv(den, p), p);
    e.rep_ = SFrac{0, FpPoly::constant(p, c), FpPoly::constant(p, 1)};
    return e;
}

KElem KElem::t_power(const FieldSpec& field, const Rat& e) {
    if (!field.in_value_group(e)) {
        throw Error(ErrorKind::ValueNotInGroup, to_string(e) + " is not in the value group of " + to_string(field));
    }
    const Coeff p = field.p();
    if (field.kind() == FieldSpec::Kind::RatP) {
        Int pe;
        long n = e.get_num().get_si();
        mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(n < 0 ? -n : n));
        return from_rat(field, n < 0 ? make_rat(Int(1), pe) : Rat(pe));
    }
    unsigned level = *log_p(e.get_den(), p);
    long n = e.get_num().get_si();
    FpPoly mono = FpPoly::monomial(p, 1, static_cast<std::size_t>(n < 0 ? -n : n));
    FpPoly one = FpPoly::constant(p, 1);
    return from_fraction(field, level, n < 0 ? one : mono, n < 0 ? mono : one);
}

KElem KElem::from_fraction(const FieldSpec& field, unsigned level, FpPoly num, FpPoly den) {
    if (field.kind() == FieldSpec::Kind::RatP) throw Error(ErrorKind::FieldMismatch, "fraction in t over Q");
    if (field.kind() == FieldSpec::Kind::RatFun && level != 0) {
        throw Error(ErrorKind::ValueNotInGroup, "fractional powers of t in F_p(t)");
    }
    KElem e(field);
    e.rep_ = normalize(field.p(), SFrac{level, std::move(num), std::move(den)});
    return e;
}

bool KElem::is_zero() const {
    if (std::holds_alternative<Rat>(rep_)) return std::get<Rat>(rep_) == 0;
    return std::get<SFrac>(rep_).num.is_zero();
}

bool operator==(const KElem& a, const KElem& b) { return a.field_ == b.field_ && a.rep_ == b.rep_; }

KElem k_add(const KElem& a, const KElem& b) {
    check_same_field(a, b);
    if (a.field().kind() == FieldSpec::Kind::RatP) return KElem::from_rat(a.field(), a.rational() + b.rational());
    SFrac s = frac_add(a.field().p(), a.fraction(), b.fraction());
    return KElem::from_fraction(a.field(), s.level, std::move(s.num), std::move(s.den));
}

KElem k_neg(const KElem& a) {
    if (a.field().kind() == FieldSpec::Kind::RatP) return KElem::from_rat(a.field(), -a.rational());
    const SFrac& f = a.fraction();
    return KElem::from_fraction(a.field(), f.level, -f.num, f.den);
}

KElem k_sub(const KElem& a, const KElem& b) { return k_add(a, k_neg(b)); }

KElem k_mul(const KElem& a, const KElem& b) {
    check_same_field(a, b);
    if (a.field().kind() == FieldSpec::Kind::RatP) return KElem::from_rat(a.field(), a.rational() * b.rational());
    SFrac s = frac_mul(a.field().p(), a.fraction(), b.fraction());
    return KElem::from_fraction(a.field(), s.level, std::move(s.num), std::move(s.den));
}

KElem k_div(const KElem& a, const KElem& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in K");
    if (a.field().kind() == FieldSpec::Kind::RatP) return KElem::from_rat(a.field(), a.rational() / b.rational());
    SFrac inv = frac_inv(a.field().p(), b.fraction());
    SFrac s = frac_mul(a.field().p(), a.fraction(), inv);
    return KElem::from_fraction(a.field(), s.level, std::move(s.num), std::move(s.den));
}

bool k_eq(const KElem& a, const KElem& b) {
    check_same_field(a, b);
    return a == b;
}

KElem k_pow(const KElem& a, long long n) {
    KElem base = a;
    if (n < 0) {
        base = k_div(KElem::from_int(a.field(), 1), a);
        n = -n;
    }
    KElem result = KElem::from_int(a.field(), 1);
    while (n > 0) {
        if (n & 1) result = k_mul(result, base);
        n >>= 1;
        if (n > 0) base = k_mul(base, base);
    }
    return result;
}

ValueQ k_val(const KElem& a) {
    if (a.is_zero()) return ValueQ::infinity();
    const Coeff p = a.field().p();
    if (a.field().kind() == FieldSpec::Kind::RatP) {
        Int rest;
        Int pz(static_cast<unsigned long>(p));
        long vn = static_cast<long>(mpz_remove(rest.get_mpz_t(), a.rational().get_num().get_mpz_t(), pz.get_mpz_t()));
        long vd = static_cast<long>(mpz_remove(rest.get_mpz_t(), a.rational().get_den().get_mpz_t(), pz.get_mpz_t()));
        return ValueQ(Rat(vn - vd));
    }
    return ValueQ(frac_val(p, a.fraction()));
}

KElem element_of_value(const FieldSpec& field, const Rat& gamma) { return KElem::t_power(field, gamma); }

KElem sample(const FieldSpec& field, std::uint64_t seed, unsigned size_bound) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(field.kind()) * 1315423911ULL + field.p());
    auto uniform = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const long bound = static_cast<long>(size_bound);
    if (rng() % 16 == 0) return KElem(field);
    const Coeff p = field.p();

    if (field.kind() == FieldSpec::Kind::RatP) {
        long num = uniform(1, 12 * (bound + 1));
        long den = uniform(1, 12 * (bound + 1));
        if (rng() % 2) num = -num;
        Rat r = make_rat(Int(num), Int(den));
        return k_mul(KElem::from_rat(field, r), element_of_value(field, Rat(uniform(-bound, bound))));
    }

    unsigned level = 0;
    if (field.kind() == FieldSpec::Kind::PerfectHull) level = static_cast<unsigned>(uniform(0, std::min<long>(2, bound)));
    auto random_poly = [&](long max_deg, bool monic) {
        long deg = uniform(0, max_deg);
        std::vector<Coeff> c(static_cast<std::size_t>(deg + 1));
        for (auto& x : c) x = static_cast<Coeff>(rng() % p);
        if (monic) c.back() = 1;
        if (c.back() == 0) c.back() = 1 + static_cast<Coeff>(rng() % (p - 1 == 0 ? 1 : p - 1));
        return FpPoly(p, std::move(c));
    };
    FpPoly num = random_poly(bound, false);
    FpPoly den = (rng() % 2) ? FpPoly::constant(p, 1) : random_poly(std::max<long>(1, bound / 2), true);
    long shift = uniform(-bound, bound);
    if (shift >= 0) {
        num = num.shifted_up(static_cast<std::size_t>(shift));
    } else {
        den = den.shifted_up(static_cast<std::size_t>(-shift));
    }
    return KElem::from_fraction(field, level, std::move(num), std::move(den));
}

namespace {

std::string t_monomial(const Rat& e) {
    if (e == 0) return "";
    if (e == 1) return "t";
    if (is_integer(e) && e > 0) return "t^" + to_string(e);
    return "t^(" + to_string(e) + ")";
}

// Sum of c_i * t^((i - shift)/p^level), highest exponent first.
std::string laurent_text(const FpPoly& poly, long shift, unsigned level, Coeff p) {
    if (poly.is_zero()) return "0";
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p, level);
    std::ostringstream out;
    bool first = true;
    const auto& c = poly.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Rat e = make_rat(Int(static_cast<long>(i) - shift), scale);
        std::string mono = t_monomial(e);
        if (!first) out << " + ";
        first = false;
        if (mono.empty()) {
            out << c[i];
        } else if (c[i] == 1) {
            out << mono;
        } else {
            out << c[i] << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace

std::string to_string(const KElem& a) {
    if (a.field().kind() == FieldSpec::Kind::RatP) return to_string(a.rational());
    const SFrac& f = a.fraction();
    const Coeff p = a.field().p();
    if (f.den.is_one()) return laurent_text(f.num, 0, f.level, p);
    if (f.den.is_monomial()) return laurent_text(f.num, static_cast<long>(f.den.order()), f.level, p);
    return "(" + laurent_text(f.num, 0, f.level, p) + ")/(" + laurent_text(f.den, 0, f.level, p) + ")";
}

}  // namespace valparam
