#include "valparam/valuation.hpp"

#include "valparam/error.hpp"

namespace valparam {

std::string to_string(ValType t) {
    switch (t) {
        case ValType::RT: return "RT";
        case ValType::VT: return "VT";
        case ValType::NT: return "NT";
        case ValType::AL: return "AL";
    }
    return {};
}

ValDesc ValDesc::monomial(const KElem& a, ExtScalar gamma) {
    ValDesc d(a.field());
    d.kind_ = Kind::Monomial;
    d.center_ = a;
    d.gamma_ = std::move(gamma);
    return d;
}

ValDesc ValDesc::augmented(const PolyK& F, ExtScalar gamma, CoefficientEvaluator base,
                           std::span<const Rat> family_values_of_F) {
    if (!F.is_monic() || F.degree() < 1) throw Error(ErrorKind::NotMonic, to_string(F) + " is not a monic key polynomial");
    if (!base) throw Error(ErrorKind::InvalidArgument, "augmented valuation without a coefficient evaluator");
    for (std::size_t i = 0; i < family_values_of_F.size(); ++i) {
        if (ext_cmp(gamma, ExtScalar::fin(family_values_of_F[i])) <= 0) {
            throw Error(ErrorKind::InvalidWitness, "gamma = " + to_string(gamma) + " does not exceed nu_" +
                                                       std::to_string(i) + "(F) = " + to_string(family_values_of_F[i]));
        }
    }
    ValDesc d(F.field());
    d.kind_ = Kind::Augmented;
    d.key_ = F;
    d.gamma_ = std::move(gamma);
    d.eval_ = std::move(base);
    return d;
}

ValDesc ValDesc::limit_of_family(const FieldSpec& field, CoefficientEvaluator stable, std::string note) {
    if (!stable) throw Error(ErrorKind::InvalidArgument, "limit valuation without an evaluator");
    ValDesc d(field);
    d.kind_ = Kind::LimitOfFamily;
    d.eval_ = std::move(stable);
    d.note_ = std::move(note);
    return d;
}

namespace {

ExtScalar call_evaluator(const CoefficientEvaluator& eval, const PolyK& f) {
    try {
        return eval(f);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::EvaluatorFailure) throw;
        throw Error(ErrorKind::EvaluatorFailure, "no certified value for " + to_string(f) + " (" + e.what() + ")");
    }
}

}  // namespace

ExtScalar val_apply(const ValDesc& d, const PolyK& f) {
    if (!(f.field() == d.field())) {
        throw Error(ErrorKind::FieldMismatch, to_string(f.field()) + " vs " + to_string(d.field()));
    }
    switch (d.kind()) {
        case ValDesc::Kind::Monomial: {
            ExtScalar best = ExtScalar::infinity();
            auto coeffs = taylor_at(f, d.center());
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (coeffs[i].is_zero()) continue;
                ExtScalar term = k_val(coeffs[i]).to_ext() + ext_scale(Int(static_cast<unsigned long>(i)), d.gamma());
                best = ext_min(best, term);
            }
            return best;
        }
        case ValDesc::Kind::Augmented: {
            ExtScalar best = ExtScalar::infinity();
            auto parts = q_expansion(f, d.key());
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (parts[j].is_zero()) continue;
                ExtScalar term = call_evaluator(d.evaluator(), parts[j]) +
                                 ext_scale(Int(static_cast<unsigned long>(j)), d.gamma());
                best = ext_min(best, term);
            }
            return best;
        }
        case ValDesc::Kind::LimitOfFamily:
            if (f.is_zero()) return ExtScalar::infinity();
            return call_evaluator(d.evaluator(), f);
    }
    return ExtScalar::infinity();
}

ValType classify(const ValDesc& d) {
    if (d.kind() == ValDesc::Kind::LimitOfFamily) return ValType::AL;
    const ExtScalar& g = d.gamma();
    if (g.is_infinity()) return ValType::NT;
    if (g.is_fin()) return ValType::RT;
    return g.cut().kind() == CutId::Kind::PlusInf ? ValType::NT : ValType::VT;
}

std::string to_string(const ValDesc& d) {
    switch (d.kind()) {
        case ValDesc::Kind::Monomial:
            return "monomial a=\"" + to_string(d.center()) + "\" gamma=\"" + to_string(d.gamma()) + "\"";
        case ValDesc::Kind::Augmented:
            return "augmented F=\"" + to_string(d.key()) + "\" gamma=\"" + to_string(d.gamma()) + "\"";
        case ValDesc::Kind::LimitOfFamily:
            return "limit certified=\"" + d.note() + "\"";
    }
    return {};
}

MonomialOrder monomial_cmp(const KElem& a, const Rat& gamma, const KElem& a2, const Rat& gamma2) {
    if (gamma < gamma2) return MonomialOrder::NotLeq;
    return k_val(a2 - a) >= ValueQ(gamma2) ? MonomialOrder::LeqHolds : MonomialOrder::NotLeq;
}

AxiomReport check_axioms(const std::function<ExtScalar(const PolyK&)>& nu, const FieldSpec& field,
                         std::span<const PolyPair> samples) {
    AxiomReport report;
    const PolyK one = PolyK::constant(KElem::from_int(field, 1));
    if (!(nu(one) == ExtScalar::fin(Rat(0)))) {
        report.counterexample = "V3: v(1) = " + to_string(nu(one));
        return report;
    }
    if (!nu(PolyK(field)).is_infinity()) {
        report.counterexample = "V3: v(0) = " + to_string(nu(PolyK(field)));
        return report;
    }
    for (const auto& [f, g] : samples) {
        ExtScalar vf = nu(f), vg = nu(g);
        ExtScalar vprod = nu(f * g);
        if (!(vprod == vf + vg)) {
            report.counterexample = "V1: f = " + to_string(f) + ", g = " + to_string(g) + ": v(fg) = " +
                                    to_string(vprod) + " but v(f) + v(g) = " + to_string(vf + vg);
            return report;
        }
        ExtScalar vsum = nu(f + g);
        if (ext_cmp(vsum, ext_min(vf, vg)) < 0) {
            report.counterexample = "V2: f = " + to_string(f) + ", g = " + to_string(g) + ": v(f+g) = " +
                                    to_string(vsum) + " < min = " + to_string(ext_min(vf, vg));
            return report;
        }
        ++report.pairs_checked;
    }
    return report;
}

AxiomReport check_axioms(const ValDesc& d, std::span<const PolyPair> samples) {
    return check_axioms([&d](const PolyK& f) { return val_apply(d, f); }, d.field(), samples);
}

std::optional<PolyK> find_separating_polynomial(const ValDesc& a, const ValDesc& b,
                                                std::span<const PolyK> candidates) {
    for (const auto& f : candidates) {
        if (!(val_apply(a, f) == val_apply(b, f))) return f;
    }
    return std::nullopt;
}

}  // namespace valparam
