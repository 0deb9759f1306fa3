#include "valparam/approx.hpp"

#include <sstream>

#include "valparam/error.hpp"

namespace valparam {

Ball make_ball(const KElem& center, const Rat& radius) {
    if (!center.field().in_value_group(radius)) {
        throw Error(ErrorKind::ValueNotInGroup, "radius " + to_string(radius) + " is not a value of " +
                                                    to_string(center.field()));
    }
    return Ball{center, radius};
}

bool ball_equal(const Ball& a, const Ball& b) {
    return a.radius == b.radius && k_val(a.center - b.center) >= ValueQ(a.radius);
}

bool ball_member(const KElem& b, const Ball& B) { return k_val(b - B.center) >= ValueQ(B.radius); }

bool ball_contains(const Ball& inner, const Ball& outer) {
    return inner.radius >= outer.radius && k_val(inner.center - outer.center) >= ValueQ(outer.radius);
}

KElem ball_witness_at_radius(const Ball& B) { return B.center + element_of_value(B.center.field(), B.radius); }

KElem separating_point(const Ball& inner, const Ball& outer) {
    if (!ball_contains(inner, outer) || !(inner.radius > outer.radius)) {
        throw Error(ErrorKind::NotStrictlyNested, to_string(inner) + " is not strictly inside " + to_string(outer));
    }
    // v(d) = outer radius keeps the point in outer while leaving inner.
    return inner.center + element_of_value(inner.center.field(), outer.radius);
}

std::string to_string(const Ball& b) { return "B(" + to_string(b.center) + ", " + to_string(b.radius) + ")"; }

ApproxType ApproxType::principal(const Ball& b) {
    ApproxType A(Kind::Principal, b.center.field());
    A.last_ = b;
    return A;
}

ApproxType ApproxType::generated(const FieldSpec& field, Nest nest, std::optional<AlgWitness> witness,
                                 std::optional<QuasiCut> radius_limit) {
    if (!nest) throw Error(ErrorKind::InvalidArgument, "generated approximation type without a nest");
    ApproxType A(Kind::Generated, field);
    A.nest_ = std::move(nest);
    A.witness_ = std::move(witness);
    A.radius_limit_ = std::move(radius_limit);
    return A;
}

Ball ApproxType::ball(std::size_t i) const { return kind_ == Kind::Principal ? *last_ : nest_(i); }

std::string to_string(const ApproxType& A, std::size_t shown) {
    if (A.kind() == ApproxType::Kind::Principal) return "principal " + to_string(A.ball(0));
    std::ostringstream out;
    out << "generated ";
    for (std::size_t i = 0; i < shown; ++i) out << to_string(A.ball(i)) << " > ";
    out << "...";
    if (A.radius_limit()) out << " radii -> " << to_string(*A.radius_limit());
    return out.str();
}

ApproxType iota(const PCSeq& seq) {
    if (!seq.has_generator()) {
        auto gammas = validate_pcs(seq.prefix());
        const std::size_t last = gammas.size() - 1;
        return ApproxType::principal(Ball{seq.prefix()[last], gammas[last]});
    }
    Nest nest = [seq](std::size_t i) {
        KElem a = seq.element(i);
        ValueQ g = k_val(seq.element(i + 1) - a);
        if (g.is_infinity()) throw Error(ErrorKind::NotPseudoCauchy, "repeated entry at index " + std::to_string(i));
        return Ball{a, g.value()};
    };
    return ApproxType::generated(seq.field(), std::move(nest), seq.witness(), seq.gamma_limit());
}

std::string to_string(Containment c) {
    switch (c) {
        case Containment::Contained: return "contained";
        case Containment::NotContained: return "not contained";
        case Containment::BudgetExhausted: return "budget exhausted";
    }
    return {};
}

Containment appr_contains(const ApproxType& A, const Ball& B, std::size_t budget) {
    if (A.kind() == ApproxType::Kind::Principal) {
        return ball_contains(A.ball(0), B) ? Containment::Contained : Containment::NotContained;
    }
    if (A.radius_limit() && quasicut_cmp(QuasiCut::principal(B.radius), *A.radius_limit()) >= 0) {
        return Containment::NotContained;  // larger than every radius of the nest
    }
    for (std::size_t i = 0; i <= budget; ++i) {
        Ball Ai = A.ball(i);
        if (ball_contains(Ai, B)) return Containment::Contained;
        // Every later ball lies in A_i, so none of them fits in B either.
        if (B.radius <= Ai.radius) return Containment::NotContained;
    }
    return Containment::BudgetExhausted;
}

PCSeq realize(const ApproxType& A) {
    const FieldSpec& field = A.field();
    if (A.kind() == ApproxType::Kind::Principal) {
        Ball b = A.ball(0);
        return PCSeq(field, {b.center, ball_witness_at_radius(b)});
    }
    Generator gen = [A](std::size_t i) { return separating_point(A.ball(i + 1), A.ball(i)); };
    std::vector<KElem> prefix{gen(0), gen(1)};
    std::optional<AlgWitness> w;
    if (A.witness()) w = AlgWitness{A.witness()->F, A.witness()->limit, {}};
    return PCSeq(field, std::move(prefix), std::move(gen), std::move(w), A.radius_limit());
}

PsiResult phi(const ApproxType& A, const AnalysisOptions& opts) { return psi(realize(A), opts); }

ApproxType appr_of_monomial(const KElem& a, const Rat& gamma) { return ApproxType::principal(make_ball(a, gamma)); }

QuasiCut supp_descr(const ApproxType& A) {
    if (A.kind() == ApproxType::Kind::Principal) return QuasiCut::principal(A.ball(0).radius);
    if (A.radius_limit()) return *A.radius_limit();
    std::vector<Rat> radii{A.ball(0).radius, A.ball(1).radius};
    return quasicut_of(sup_of_values(radii, std::nullopt));
}

ValType classify_appr(const ApproxType& A) {
    if (A.kind() == ApproxType::Kind::Principal) return ValType::RT;
    if (!A.witness()) return ValType::AL;
    const QuasiCut& lim = A.witness()->limit;
    return !lim.is_principal() && lim.cut().kind() == CutId::Kind::PlusInf ? ValType::NT : ValType::VT;
}

bool appr_equal_on_prefix(const ApproxType& A, const ApproxType& B, std::size_t n) {
    if (A.kind() != B.kind()) return false;
    if (A.kind() == ApproxType::Kind::Principal) return ball_equal(A.ball(0), B.ball(0));
    auto cofinal = [n](const ApproxType& X, const ApproxType& Y) {
        for (std::size_t i = 0; i < n; ++i) {
            Ball Xi = X.ball(i);
            bool found = false;
            for (std::size_t j = 0; j < 2 * n && !found; ++j) found = ball_contains(Y.ball(j), Xi);
            if (!found) return false;
        }
        return true;
    };
    return cofinal(A, B) && cofinal(B, A);
}

std::vector<PolyK> separating_candidates(const ApproxType& A, const ApproxType& B, std::size_t depth) {
    std::vector<PolyK> out;
    for (const ApproxType* X : {&A, &B}) {
        std::size_t n = X->kind() == ApproxType::Kind::Principal ? 1 : depth;
        for (std::size_t i = 0; i < n; ++i) out.push_back(PolyK::x_minus(X->ball(i).center));
    }
    for (const ApproxType* X : {&A, &B}) {
        if (X->witness()) out.push_back(X->witness()->F);
    }
    return out;
}

}  // namespace valparam
