#include "valparam/pcs.hpp"

#include <algorithm>
#include <sstream>

#include "valparam/error.hpp"
#include "valparam/kernels.hpp"

namespace valparam {

PCSeq::PCSeq(const FieldSpec& field, std::vector<KElem> prefix, Generator generator, std::optional<AlgWitness> witness,
             std::optional<QuasiCut> gamma_limit)
    : field_(field),
      prefix_(std::move(prefix)),
      generator_(std::move(generator)),
      witness_(std::move(witness)),
      gamma_limit_(std::move(gamma_limit)) {
    if (prefix_.size() < 2) throw Error(ErrorKind::InvalidArgument, "a sequence needs at least two entries");
    for (const auto& a : prefix_) {
        if (!(a.field() == field_)) throw Error(ErrorKind::FieldMismatch, "sequence entry over " + to_string(a.field()));
    }
    if (witness_ && !(witness_->F.field() == field_)) throw Error(ErrorKind::FieldMismatch, "witness over another field");
}

KElem PCSeq::element(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    if (!generator_) {
        throw Error(ErrorKind::GeneratorMissing,
                    "index " + std::to_string(i) + " past a finite sequence of length " + std::to_string(prefix_.size()));
    }
    return generator_(i);
}

std::vector<KElem> PCSeq::elements(std::size_t count) const {
    std::vector<KElem> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(element(i));
    return out;
}

PCSeq PCSeq::with_witness(std::optional<AlgWitness> w) const {
    PCSeq s = *this;
    if (w && !(w->F.field() == field_)) throw Error(ErrorKind::FieldMismatch, "witness over another field");
    s.witness_ = std::move(w);
    return s;
}

PCSeq PCSeq::with_gamma_limit(std::optional<QuasiCut> g) const {
    PCSeq s = *this;
    s.gamma_limit_ = std::move(g);
    return s;
}

std::vector<Rat> validate_pcs(std::span<const KElem> prefix) {
    const std::size_t n = prefix.size();
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "a sequence needs at least two entries");
    auto d = kernels::difference_valuations(prefix);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d[i][j].is_infinity()) {
                throw Error(ErrorKind::NotPseudoCauchy,
                            "entries " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!(d[i][j] < d[j][k])) {
                    throw Error(ErrorKind::NotPseudoCauchy, "triple (" + std::to_string(i) + ", " + std::to_string(j) +
                                                                ", " + std::to_string(k) + "): v(a_i - a_j) = " +
                                                                to_string(d[i][j]) + ", v(a_j - a_k) = " +
                                                                to_string(d[j][k]));
                }
            }
        }
    }
    std::vector<Rat> gammas;
    gammas.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) gammas.push_back(d[i][i + 1].value());
    return gammas;
}

SeqPrefix::SeqPrefix(const PCSeq& seq, std::size_t count) : field_(seq.field()), elems_(seq.elements(count)) {
    gammas_ = validate_pcs(elems_);
}

std::string to_string(const Certificate& c) {
    if (c.kind == Certificate::Kind::Dominance) return "Dominance";
    return "Window(" + std::to_string(c.window) + ")";
}

std::string to_string(const StabilityReport& r) {
    std::ostringstream out;
    switch (r.kind) {
        case StabilityReport::Kind::UltimatelyConstant:
            out << "UltimatelyConstant(" << to_string(r.value) << ", since " << r.since << ", "
                << to_string(r.certificate) << ")";
            break;
        case StabilityReport::Kind::StrictlyIncreasing: {
            out << "StrictlyIncreasing([";
            for (std::size_t i = 0; i < r.observed.size(); ++i) out << (i ? ", " : "") << to_string(r.observed[i]);
            out << "])";
            break;
        }
        case StabilityReport::Kind::Undetermined: out << "Undetermined"; break;
    }
    return out.str();
}

StabilityReport analyze_values(std::vector<ValueQ> values, std::size_t window) {
    if (window < 2) throw Error(ErrorKind::InvalidArgument, "window must be at least 2");
    StabilityReport rep;
    rep.observed = std::move(values);
    const auto& v = rep.observed;
    const std::size_t n = v.size();
    if (n == 0 || v.back().is_infinity()) return rep;

    std::size_t r = n - 1;
    while (r > 0 && v[r - 1] == v[r]) --r;
    if (n - r >= window) {
        rep.kind = StabilityReport::Kind::UltimatelyConstant;
        rep.value = v.back().value();
        rep.since = r;
        rep.certificate = Certificate{Certificate::Kind::Window, window};
        return rep;
    }

    std::size_t s = n - 1;
    while (s > 0 && !v[s - 1].is_infinity() && v[s - 1] < v[s]) --s;
    if (n - s >= window + 1) {
        // A repeat immediately before the rise cannot happen for genuine data.
        if (s > 0 && v[s - 1] == v[s]) return rep;
        rep.kind = StabilityReport::Kind::StrictlyIncreasing;
    }
    return rep;
}

StabilityReport value_behavior(const PCSeq& seq, const PolyK& f, std::size_t upto, std::size_t window) {
    auto points = seq.elements(upto + 1);
    return analyze_values(kernels::values_along(f, points), window);
}

std::vector<ExtScalar> family_values(const SeqPrefix& prefix, const PolyK& f) {
    std::vector<ExtScalar> out;
    out.reserve(prefix.gammas().size());
    for (std::size_t i = 0; i < prefix.gammas().size(); ++i) {
        out.push_back(val_apply(ValDesc::monomial(prefix.elements()[i], ExtScalar::fin(prefix.gammas()[i])), f));
    }
    return out;
}

std::size_t select_dominant(std::span<const Rat> betas, std::span<const long> ts, const ExtScalar& limit) {
    if (betas.empty() || betas.size() != ts.size()) {
        throw Error(ErrorKind::InvalidArgument, "select_dominant needs two nonempty lists of equal length");
    }
    if (limit.is_infinity()) throw Error(ErrorKind::InvalidArgument, "select_dominant at an infinite limit");
    for (std::size_t l = 0; l < ts.size(); ++l) {
        if (ts[l] <= 0) throw Error(ErrorKind::InvalidArgument, "slopes must be positive");
        for (std::size_t m = 0; m < l; ++m) {
            if (ts[l] == ts[m]) throw Error(ErrorKind::InvalidArgument, "slopes must be distinct");
        }
    }
    std::size_t best = 0;
    ExtScalar best_val = ExtScalar::fin(betas[0]) + ext_scale(Int(ts[0]), limit);
    bool tie = false;
    for (std::size_t l = 1; l < betas.size(); ++l) {
        ExtScalar val = ExtScalar::fin(betas[l]) + ext_scale(Int(ts[l]), limit);
        auto c = ext_cmp(val, best_val);
        if (c < 0) {
            best = l;
            best_val = val;
            tie = false;
        } else if (c == 0) {
            tie = true;
        }
    }
    if (tie) {
        throw Error(ErrorKind::AmbiguousAtLimit, "two lines attain the minimum " + to_string(best_val) + " at " +
                                                     to_string(limit));
    }
    return best;
}

StableValue stable_value(const SeqPrefix& prefix, const PolyK& f, std::size_t window) {
    const Certificate dominance{Certificate::Kind::Dominance, 0};
    if (f.is_zero()) return {ExtScalar::infinity(), dominance, 0};
    if (f.degree() == 0) return {k_val(f.coeff(0)).to_ext(), dominance, 0};

    const auto& elems = prefix.elements();
    const auto& gammas = prefix.gammas();
    auto values = kernels::values_along(f, elems);
    for (std::size_t n = 0; n < gammas.size(); ++n) {
        if (values[n].is_infinity()) continue;
        auto coeffs = taylor_at(f, elems[n]);
        std::optional<Rat> bound;
        for (std::size_t l = 1; l < coeffs.size(); ++l) {
            if (coeffs[l].is_zero()) continue;
            Rat b = k_val(coeffs[l]).value() + Rat(static_cast<long>(l)) * gammas[n];
            if (!bound || b < *bound) bound = b;
        }
        if (bound && values[n].value() < *bound) return {ExtScalar::fin(values[n].value()), dominance, n};
    }

    StabilityReport rep = analyze_values(std::move(values), window);
    switch (rep.kind) {
        case StabilityReport::Kind::UltimatelyConstant:
            return {ExtScalar::fin(rep.value), rep.certificate, rep.since};
        case StabilityReport::Kind::StrictlyIncreasing:
            throw Error(ErrorKind::NotStable, to_string(f) + " is not fixed: " + to_string(rep));
        case StabilityReport::Kind::Undetermined: break;
    }
    throw Error(ErrorKind::Undetermined, "no stability verdict for " + to_string(f) + " within " +
                                             std::to_string(prefix.size()) + " terms");
}

StableValue stable_value(const PCSeq& seq, const PolyK& f, std::size_t upto, std::size_t window) {
    return stable_value(SeqPrefix(seq, upto + 1), f, window);
}

namespace {

PsiResult psi_finite(const PCSeq& seq) {
    auto gammas = validate_pcs(seq.prefix());
    const std::size_t last = gammas.size() - 1;
    ExtScalar g = ExtScalar::fin(gammas[last]);
    return {ValDesc::monomial(seq.prefix()[last], g), ValType::RT, g,
            "finite index set, maximum radius at index " + std::to_string(last)};
}

PsiResult psi_witnessed(const PCSeq& seq, const std::shared_ptr<const SeqPrefix>& prefix, const AnalysisOptions& opts) {
    const AlgWitness& w = *seq.witness();
    const PolyK& F = w.F;
    if (!F.is_monic() || F.degree() < 1) throw Error(ErrorKind::InvalidWitness, to_string(F) + " is not monic");
    if (w.limit.is_principal() || w.limit.cut().kind() == CutId::Kind::Above) {
        throw Error(ErrorKind::InconsistentLimit,
                    "strictly increasing values cannot have limit " + to_string(w.limit));
    }

    auto values = kernels::values_along(F, prefix->elements());
    std::vector<Rat> finite;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_infinity()) {
            throw Error(ErrorKind::InvalidWitness, to_string(F) + " vanishes at a_" + std::to_string(i));
        }
        if (i > 0 && !(values[i - 1] < values[i])) {
            throw Error(ErrorKind::InvalidWitness,
                        "v(F(a_i)) is not strictly increasing at index " + std::to_string(i));
        }
        if (w.closed_form && w.closed_form(i) != values[i].value()) {
            throw Error(ErrorKind::InvalidWitness, "v(F(a_" + std::to_string(i) + ")) = " + to_string(values[i]) +
                                                       " but the closed form gives " + to_string(w.closed_form(i)));
        }
        finite.push_back(values[i].value());
    }
    for (long l = 1; l < F.degree(); ++l) {
        PolyK d = hasse_derivative(F, static_cast<unsigned>(l));
        try {
            (void)stable_value(*prefix, d, opts.window);
        } catch (const Error& e) {
            throw Error(ErrorKind::InvalidWitness, "Hasse coefficient " + std::to_string(l) + " of F is not stable (" +
                                                       e.what() + ")");
        }
    }

    ExtScalar gamma = sup_of_values(finite, w.limit);
    if (gamma.is_cut() && gamma.cut().kind() == CutId::Kind::PlusInf) gamma = ExtScalar::infinity();

    std::vector<Rat> nu_F;
    for (const auto& x : family_values(*prefix, F)) nu_F.push_back(x.offset());
    const std::size_t window = opts.window;
    CoefficientEvaluator base = [prefix, window](const PolyK& g) { return stable_value(*prefix, g, window).value; };
    ValDesc desc = ValDesc::augmented(F, gamma, std::move(base), nu_F);
    std::string cert = "witness F = " + to_string(F) + ", v(F(a_i)) strictly increasing for i <= " +
                       std::to_string(values.size() - 1) + ", limit " + to_string(w.limit);
    return {desc, classify(desc), gamma, cert};
}

PsiResult psi_transcendental(const PCSeq& seq, const std::shared_ptr<const SeqPrefix>& prefix,
                             const AnalysisOptions& opts) {
    const FieldSpec& field = seq.field();
    std::vector<PolyK> tests = opts.probes;
    for (unsigned d = 1; d <= opts.degree_bound; ++d) {
        tests.push_back(PolyK::monomial(KElem::from_int(field, 1), d));
        for (std::size_t k = 0; k < opts.samples; ++k) {
            tests.push_back(sample_poly(field, opts.seed * 7919 + d * 104729 + k, d, 2));
        }
    }
    for (const auto& g : tests) {
        try {
            (void)stable_value(*prefix, g, opts.window);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotStable && e.kind() != ErrorKind::Undetermined) throw;
            throw Error(ErrorKind::Inconclusive, "no witness given and " + to_string(g) + " did not stabilize (" +
                                                     e.what() + ")");
        }
    }
    std::string note = "certified up to degree " + std::to_string(opts.degree_bound) + ", prefix " +
                       std::to_string(prefix->size() - 1);
    const std::size_t window = opts.window;
    CoefficientEvaluator stable = [prefix, window](const PolyK& g) { return stable_value(*prefix, g, window).value; };
    std::optional<ExtScalar> gamma;
    if (seq.gamma_limit()) gamma = realize(*seq.gamma_limit());
    return {ValDesc::limit_of_family(field, std::move(stable), note), ValType::AL, gamma, note};
}

}  // namespace

PsiResult psi(const PCSeq& seq, const AnalysisOptions& opts) {
    if (!seq.has_generator()) return psi_finite(seq);
    auto prefix = std::make_shared<const SeqPrefix>(seq, std::max<std::size_t>(opts.upto + 1, 3));
    if (seq.witness()) return psi_witnessed(seq, prefix, opts);
    return psi_transcendental(seq, prefix, opts);
}

// ---------------------------------------------------------------------------
// Built-in sequences

namespace {

void require_char_p(const FieldSpec& field, const char* what) {
    if (field.kind() == FieldSpec::Kind::RatP) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs a field of characteristic p");
    }
}

Int int_pow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

PCSeq from_generator(const FieldSpec& field, Generator gen, std::optional<AlgWitness> w, std::optional<QuasiCut> gl) {
    std::vector<KElem> prefix{gen(0), gen(1)};
    return PCSeq(field, std::move(prefix), std::move(gen), std::move(w), std::move(gl));
}

// Exponents of the first `count` nonzero digits.
std::vector<std::size_t> nonzero_positions(const std::function<Coeff(std::size_t)>& digit, std::size_t count) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; out.size() < count; ++j) {
        if (digit(j) != 0) out.push_back(j);
    }
    return out;
}

Generator digit_series(const FieldSpec& field, std::function<Coeff(std::size_t)> digit) {
    return [field, digit](std::size_t i) {
        KElem a(field);
        for (std::size_t j : nonzero_positions(digit, i + 1)) {
            a = a + KElem::from_int(field, digit(j)) * KElem::t_power(field, Rat(static_cast<long>(j)));
        }
        return a;
    };
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

PCSeq artin_schreier_nt(const FieldSpec& field) {
    require_char_p(field, "artin_schreier_nt");
    const unsigned long p = field.p();
    Generator gen = [field, p](std::size_t i) {
        KElem a(field);
        for (std::size_t j = 0; j <= i; ++j) a = a + KElem::t_power(field, Rat(int_pow(p, j)));
        return a;
    };
    PolyK x = PolyK::x(field);
    PolyK F = poly_pow(x, static_cast<unsigned>(p)) - x + PolyK::constant(KElem::t_power(field, Rat(1)));
    ClosedForm cf = [p](std::size_t i) { return Rat(int_pow(p, i + 1)); };
    QuasiCut top = QuasiCut::gap(CutId::plus_inf());
    return from_generator(field, std::move(gen), AlgWitness{F, top, cf}, top);
}

PCSeq artin_schreier_vt(const FieldSpec& field, const Rat& shift) {
    if (field.kind() != FieldSpec::Kind::PerfectHull) {
        throw Error(ErrorKind::InvalidArgument, "artin_schreier_vt needs the perfect hull");
    }
    const unsigned long p = field.p();
    const KElem scale = KElem::t_power(field, shift);
    Generator gen = [field, p, scale](std::size_t i) {
        KElem a(field);
        for (std::size_t j = 0; j <= i; ++j) a = a + KElem::t_power(field, make_rat(Int(-1), int_pow(p, j)));
        return scale * a;
    };
    const Rat pr(static_cast<long>(p));
    PolyK x = PolyK::x(field);
    PolyK F = poly_pow(x, static_cast<unsigned>(p)) - x.scaled(KElem::t_power(field, shift * (pr - 1))) -
              PolyK::constant(KElem::t_power(field, pr * (shift - 1)));
    ClosedForm cf = [p, shift, pr](std::size_t i) -> Rat { return shift * pr - make_rat(Int(1), int_pow(p, i)); };
    return from_generator(field, std::move(gen), AlgWitness{F, QuasiCut::gap(CutId::below(shift * pr)), cf},
                          QuasiCut::gap(CutId::below(shift)));
}

PCSeq periodic_series(const FieldSpec& field, std::vector<Coeff> pre_period, std::vector<Coeff> period) {
    require_char_p(field, "periodic_series");
    const Coeff p = field.p();
    for (auto& d : pre_period) d %= p;
    for (auto& d : period) d %= p;
    if (std::all_of(period.begin(), period.end(), [](Coeff d) { return d == 0; })) {
        throw Error(ErrorKind::InvalidArgument, "the period needs a nonzero digit");
    }
    auto digit = [pre_period, period](std::size_t j) -> Coeff {
        if (j < pre_period.size()) return pre_period[j];
        return period[(j - pre_period.size()) % period.size()];
    };

    // eta = pre(t) + t^m * per(t) / (1 - t^L)
    const std::size_t m = pre_period.size(), L = period.size();
    FpPoly pre_poly(p, pre_period);
    FpPoly per_poly = FpPoly(p, period).shifted_up(m);
    FpPoly one_minus = FpPoly::constant(p, 1) - FpPoly::monomial(p, 1, L);
    KElem eta = KElem::from_fraction(field, 0, pre_poly * one_minus + per_poly, one_minus);
    PolyK F = PolyK::x_minus(eta);
    ClosedForm cf = [digit](std::size_t i) {
        return Rat(static_cast<long>(nonzero_positions(digit, i + 2).back()));
    };
    QuasiCut top = QuasiCut::gap(CutId::plus_inf());
    return from_generator(field, digit_series(field, digit), AlgWitness{F, top, cf}, top);
}

PCSeq random_series(const FieldSpec& field, std::uint64_t seed) {
    require_char_p(field, "random_series");
    const Coeff p = field.p();
    auto digit = [seed, p](std::size_t j) -> Coeff {
        return static_cast<Coeff>(splitmix64(seed * 0x100000001B3ULL ^ splitmix64(j)) % p);
    };
    return from_generator(field, digit_series(field, digit), std::nullopt, QuasiCut::gap(CutId::plus_inf()));
}

PCSeq rt_example(const FieldSpec& field) {
    require_char_p(field, "rt_example");
    KElem t = KElem::t_power(field, Rat(1));
    return PCSeq(field, {t, t + t * t});
}

}  // namespace valparam
