#include <gtest/gtest.h>

#include "valparam/error.hpp"
#include "valparam/pcs.hpp"

using namespace valparam;

namespace {

PolyK P(const FieldSpec& f, const char* s) { return parse_poly(f, s); }
KElem E(const FieldSpec& f, const char* s) { return parse_elem(f, s); }
Rat q(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

std::vector<ValueQ> vals(std::initializer_list<long> xs) {
    std::vector<ValueQ> out;
    for (long x : xs) out.emplace_back(Rat(x));
    return out;
}

}  // namespace

TEST(ValidatePcs, Examples) {
    auto f = FieldSpec::rat_fun(3);
    std::vector<KElem> ok{E(f, "0"), E(f, "t"), E(f, "t + t^2")};
    auto g = validate_pcs(ok);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0], Rat(1));
    EXPECT_EQ(g[1], Rat(2));

    auto r = FieldSpec::rat_p(3);
    std::vector<KElem> bad{E(r, "0"), E(r, "3"), E(r, "3")};
    EXPECT_EQ(kind_of([&] { validate_pcs(bad); }), ErrorKind::NotPseudoCauchy);
    std::vector<KElem> flat{E(r, "0"), E(r, "3"), E(r, "6")};
    EXPECT_EQ(kind_of([&] { validate_pcs(flat); }), ErrorKind::NotPseudoCauchy);
}

TEST(ValidatePcs, RadiiIncreaseProperty) {
    for (unsigned p : {2u, 3u}) {
        auto h = FieldSpec::perfect_hull(p);
        for (const auto& seq : {artin_schreier_nt(h), artin_schreier_vt(h), random_series(h, 11)}) {
            auto elems = seq.elements(10);
            auto g = validate_pcs(elems);
            for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
        }
    }
}

TEST(PCSeqCtor, Validation) {
    auto f = FieldSpec::rat_fun(2);
    EXPECT_EQ(kind_of([&] { PCSeq(f, {E(f, "t")}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { PCSeq(f, {E(f, "t"), E(FieldSpec::rat_fun(3), "t")}); }), ErrorKind::FieldMismatch);
    PCSeq s(f, {E(f, "t"), E(f, "t + t^2")});
    EXPECT_EQ(kind_of([&] { (void)s.element(2); }), ErrorKind::GeneratorMissing);
}

TEST(AnalyzeValues, Cases) {
    auto c = analyze_values(vals({1, 4, 2, 2, 2}), 3);
    EXPECT_EQ(c.kind, StabilityReport::Kind::UltimatelyConstant);
    EXPECT_EQ(c.value, Rat(2));
    EXPECT_EQ(c.since, 2u);

    auto s = analyze_values(vals({5, 1, 2, 3, 4}), 3);
    EXPECT_EQ(s.kind, StabilityReport::Kind::StrictlyIncreasing);

    EXPECT_EQ(analyze_values(vals({1, 2, 1, 2}), 3).kind, StabilityReport::Kind::Undetermined);
    EXPECT_EQ(analyze_values(vals({1, 1, 2, 3}), 3).kind, StabilityReport::Kind::Undetermined);
    EXPECT_EQ(kind_of([] { analyze_values(vals({1, 1}), 1); }), ErrorKind::InvalidArgument);
}

TEST(ValueBehavior, ArtinSchreier) {
    auto h = FieldSpec::perfect_hull(2);
    auto nt = artin_schreier_nt(h);
    auto r = value_behavior(nt, nt.witness()->F, 5);
    EXPECT_EQ(r.kind, StabilityReport::Kind::StrictlyIncreasing);
    EXPECT_EQ(to_string(r), "StrictlyIncreasing([2, 4, 8, 16, 32, 64])");

    auto vt = artin_schreier_vt(h);
    auto rv = value_behavior(vt, vt.witness()->F, 4);
    ASSERT_EQ(rv.observed.size(), 5u);
    EXPECT_EQ(rv.observed[0], ValueQ(Rat(-1)));
    EXPECT_EQ(rv.observed[1], ValueQ(q(-1, 2)));
    EXPECT_EQ(rv.observed[4], ValueQ(q(-1, 16)));
}

TEST(ValueBehavior, FiniteSequenceNeedsGenerator) {
    auto f = FieldSpec::rat_fun(2);
    auto s = rt_example(f);
    EXPECT_EQ(kind_of([&] { value_behavior(s, P(f, "x"), 5); }), ErrorKind::GeneratorMissing);
}

TEST(SelectDominant, Examples) {
    std::vector<Rat> betas{Rat(0), Rat(-1)};
    std::vector<long> ts{1, 2};
    EXPECT_EQ(select_dominant(betas, ts, ExtScalar::fin(Rat(0))), 1u);
    EXPECT_EQ(select_dominant(betas, ts, ExtScalar::fin(Rat(2))), 0u);
    EXPECT_EQ(kind_of([&] { select_dominant(betas, ts, ExtScalar::fin(Rat(1))); }), ErrorKind::AmbiguousAtLimit);
    // Just below the crossing point the steeper line is smaller.
    EXPECT_EQ(select_dominant(betas, ts, ExtScalar::unit(CutId::below(Rat(1)))), 1u);
    EXPECT_EQ(select_dominant(betas, ts, ExtScalar::cut_lin(CutId::above(Rat(1)), Int(1), Rat(0))), 0u);
}

TEST(StableValue, Examples) {
    auto h = FieldSpec::perfect_hull(2);
    auto vt = artin_schreier_vt(h);
    auto sx = stable_value(vt, P(h, "x"));
    EXPECT_EQ(sx.value, ExtScalar::fin(Rat(-1)));
    EXPECT_EQ(sx.certificate.kind, Certificate::Kind::Dominance);

    auto nt = artin_schreier_nt(h);
    EXPECT_EQ(stable_value(nt, P(h, "x")).value, ExtScalar::fin(Rat(1)));
    EXPECT_EQ(stable_value(nt, P(h, "x - t")).value, ExtScalar::fin(Rat(2)));
    EXPECT_EQ(kind_of([&] { stable_value(nt, nt.witness()->F); }), ErrorKind::NotStable);
    EXPECT_TRUE(stable_value(nt, PolyK(h)).value.is_infinity());
}

TEST(StableValue, DegreeBelowWitnessStabilizes) {
    // Property: every polynomial of degree < deg F has a stable value.
    for (unsigned p : {2u, 3u}) {
        auto h = FieldSpec::perfect_hull(p);
        for (const auto& seq : {artin_schreier_nt(h), artin_schreier_vt(h)}) {
            SeqPrefix prefix(seq, 7);
            for (std::uint64_t s = 0; s < 30; ++s) {
                auto g = sample_poly(h, s, static_cast<unsigned>(s % p), 2);
                EXPECT_NO_THROW((void)stable_value(prefix, g)) << to_string(g);
            }
        }
    }
}

TEST(FamilyValues, Monotone) {
    // nu_i(f) is nondecreasing in i.
    auto h = FieldSpec::perfect_hull(3);
    for (const auto& seq : {artin_schreier_nt(h), artin_schreier_vt(h), random_series(h, 4)}) {
        SeqPrefix prefix(seq, 8);
        for (std::uint64_t s = 0; s < 20; ++s) {
            auto g = sample_poly(h, 50 + s, 1 + static_cast<unsigned>(s % 4), 2);
            auto nu = family_values(prefix, g);
            for (std::size_t i = 1; i < nu.size(); ++i) EXPECT_TRUE(nu[i - 1] <= nu[i]);
        }
    }
}

TEST(FamilyValues, EqualsValueAtLaterPoints) {
    // For a stable g, nu_i(g) = v(g(a_j)) once i is past the stability index.
    auto h = FieldSpec::perfect_hull(2);
    auto vt = artin_schreier_vt(h);
    SeqPrefix prefix(vt, 9);
    auto g = P(h, "x + t^(-1)");
    auto sv = stable_value(prefix, g);
    auto nu = family_values(prefix, g);
    EXPECT_EQ(nu.back(), sv.value);
}

TEST(Psi, RT) {
    auto f = FieldSpec::rat_fun(3);
    auto r = psi(rt_example(f));
    EXPECT_EQ(r.type, ValType::RT);
    EXPECT_EQ(to_string(r.desc), "monomial a=\"t\" gamma=\"2\"");
}

TEST(Psi, NTandVT) {
    for (unsigned p : {2u, 3u}) {
        auto h = FieldSpec::perfect_hull(p);
        auto nt = psi(artin_schreier_nt(h));
        EXPECT_EQ(nt.type, ValType::NT);
        EXPECT_TRUE(val_apply(nt.desc, artin_schreier_nt(h).witness()->F).is_infinity());
        EXPECT_EQ(val_apply(nt.desc, P(h, "x")), ExtScalar::fin(Rat(1)));

        auto vseq = artin_schreier_vt(h);
        auto vt = psi(vseq);
        EXPECT_EQ(vt.type, ValType::VT);
        ASSERT_TRUE(vt.gamma.has_value());
        EXPECT_EQ(to_string(*vt.gamma), "0-");
        EXPECT_EQ(val_apply(vt.desc, vseq.witness()->F), ExtScalar::unit(CutId::below(Rat(0))));
        EXPECT_EQ(val_apply(vt.desc, P(h, "x")), ExtScalar::fin(Rat(-1)));
    }
}

TEST(Psi, PeriodicSeriesLimitInField) {
    auto f = FieldSpec::rat_fun(2);
    auto seq = periodic_series(f, {1, 0}, {1, 1, 0});
    auto r = psi(seq);
    EXPECT_EQ(r.type, ValType::NT);
    EXPECT_TRUE(val_apply(r.desc, seq.witness()->F).is_infinity());
}

TEST(Psi, WitnessChecks) {
    auto h = FieldSpec::perfect_hull(2);
    auto nt = artin_schreier_nt(h);
    AlgWitness w = *nt.witness();

    auto bad_limit = w;
    bad_limit.limit = QuasiCut::principal(Rat(3));
    EXPECT_EQ(kind_of([&] { psi(nt.with_witness(bad_limit)); }), ErrorKind::InconsistentLimit);
    auto above = w;
    above.limit = QuasiCut::gap(CutId::above(Rat(3)));
    EXPECT_EQ(kind_of([&] { psi(nt.with_witness(above)); }), ErrorKind::InconsistentLimit);

    auto wrong_form = w;
    wrong_form.closed_form = [](std::size_t i) { return Rat(static_cast<long>(i)); };
    EXPECT_EQ(kind_of([&] { psi(nt.with_witness(wrong_form)); }), ErrorKind::InvalidWitness);

    auto wrong_F = w;
    wrong_F.F = P(h, "x^2 + t");
    wrong_F.closed_form = {};
    EXPECT_EQ(kind_of([&] { psi(nt.with_witness(wrong_F)); }), ErrorKind::InvalidWitness);
}

TEST(Psi, TranscendentalFamily) {
    auto h = FieldSpec::perfect_hull(2);
    AnalysisOptions opts;
    opts.upto = 30;
    auto seq = random_series(h, 7);
    auto r = psi(seq, opts);
    EXPECT_EQ(r.type, ValType::AL);
    EXPECT_NE(r.certificate.find("degree 3"), std::string::npos);
    EXPECT_EQ(val_apply(r.desc, P(h, "x")), k_val(seq.element(0)).to_ext());
}

TEST(Psi, WithoutWitnessBelowDegreeLooksTranscendental) {
    // Nothing of degree < p tells the root of x^p - x + t apart from a
    // transcendental limit.
    auto h = FieldSpec::perfect_hull(3);
    auto nt = artin_schreier_nt(h).with_witness(std::nullopt);
    AnalysisOptions opts;
    opts.degree_bound = 2;
    EXPECT_EQ(psi(nt, opts).type, ValType::AL);
}

TEST(Builtins, Validation) {
    EXPECT_EQ(kind_of([] { artin_schreier_nt(FieldSpec::rat_p(2)); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { artin_schreier_vt(FieldSpec::rat_fun(2)); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { periodic_series(FieldSpec::rat_fun(2), {1}, {0, 2}); }), ErrorKind::InvalidArgument);
}

TEST(Builtins, VtShiftedClosedForm) {
    auto h = FieldSpec::perfect_hull(3);
    for (long s : {-1L, 1L, 2L}) {
        auto seq = artin_schreier_vt(h, Rat(s));
        auto r = value_behavior(seq, seq.witness()->F, 5);
        for (std::size_t i = 0; i < r.observed.size(); ++i) {
            EXPECT_EQ(r.observed[i], ValueQ(seq.witness()->closed_form(i))) << s << " " << i;
        }
        EXPECT_EQ(psi(seq).type, ValType::VT);
    }
}
