// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "valparam/approx.hpp"
#include "valparam/error.hpp"
#include "valparam/pcs.hpp"

using namespace valparam;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok && first_failure_.empty()) first_failure_ = what;
    }
    Outcome done(const std::string& summary) const {
        if (first_failure_.empty()) return {true, summary + " (" + std::to_string(count_) + " checks)"};
        return {false, first_failure_};
    }

private:
    std::size_t count_ = 0;
    std::string first_failure_;
};

std::vector<FieldSpec> all_fields() {
    std::vector<FieldSpec> out;
    for (unsigned p : {2u, 3u, 5u}) {
        out.push_back(FieldSpec::rat_p(p));
        out.push_back(FieldSpec::rat_fun(p));
        out.push_back(FieldSpec::perfect_hull(p));
    }
    return out;
}

// A random element of the value group of f, small height.
Rat random_value(const FieldSpec& f, std::mt19937_64& rng) {
    long n = static_cast<long>(rng() % 9) - 4;
    if (f.kind() != FieldSpec::Kind::PerfectHull) return Rat(n);
    long d = 1;
    for (unsigned k = rng() % 3; k > 0; --k) d *= static_cast<long>(f.p());
    return make_rat(Int(n), Int(d));
}

// An element of value exactly gamma times a random unit.
KElem random_of_value(const FieldSpec& f, const Rat& gamma, std::mt19937_64& rng) {
    KElem u = sample(f, rng(), 2);
    if (u.is_zero()) u = KElem::from_int(f, 1);
    Rat shift = gamma - k_val(u).value();
    return u * element_of_value(f, shift);
}

std::string str(const ExtScalar& x) { return to_string(x); }

Outcome criterion_1() {
    Check c;
    std::mt19937_64 rng(1);
    for (const auto& f : all_fields()) {
        for (int n = 0; n < 500; ++n) {
            Ball A = make_ball(sample(f, rng(), 2), random_value(f, rng));
            // recentering
            KElem b = A.center + random_of_value(f, A.radius + Rat(static_cast<long>(rng() % 3)), rng);
            Ball Ab{b, A.radius};
            c.expect(ball_member(b, A) && ball_equal(A, Ab), "recentering " + to_string(A) + " at " + to_string(b));
            KElem probe = A.center + random_of_value(f, A.radius + Rat(static_cast<long>(rng() % 3) - 1), rng);
            c.expect(ball_member(probe, A) == ball_member(probe, Ab), "recentered membership " + to_string(probe));
            // witness at radius
            KElem w = ball_witness_at_radius(A);
            c.expect(k_val(w - A.center) == ValueQ(A.radius), "witness " + to_string(A));
            // containment criterion against membership of a and a + t^gamma
            Ball B = make_ball(A.center + random_of_value(f, random_value(f, rng), rng), random_value(f, rng));
            bool oracle = ball_member(A.center, B) && ball_member(w, B);
            c.expect(ball_contains(A, B) == oracle, "containment " + to_string(A) + " in " + to_string(B));
            // separating point
            Ball inner{A.center + random_of_value(f, A.radius + Rat(1), rng), A.radius + Rat(1)};
            KElem s = separating_point(inner, A);
            c.expect(ball_member(s, A) && !ball_member(s, inner), "separating point " + to_string(inner));
        }
    }
    return c.done("500 cases on each of 9 fields");
}

Outcome criterion_2() {
    Check c;
    std::mt19937_64 rng(2);
    std::vector<FieldSpec> fields{FieldSpec::rat_p(3), FieldSpec::rat_fun(3), FieldSpec::perfect_hull(2)};
    std::size_t positives = 0;
    for (int n = 0; n < 500; ++n) {
        const FieldSpec& f = fields[n % 3];
        KElem a = sample(f, rng(), 2);
        Rat g = random_value(f, rng);
        Rat g2 = random_value(f, rng);
        // Half the cases are built to be nested.
        KElem a2 = n % 2 ? a + random_of_value(f, g2 + Rat(static_cast<long>(rng() % 2)), rng) : sample(f, rng(), 2);
        bool verdict = monomial_cmp(a, g, a2, g2) == MonomialOrder::LeqHolds;
        Ball inner{a, g}, outer{a2, g2};
        bool oracle = ball_member(a, outer) && ball_member(ball_witness_at_radius(inner), outer);
        c.expect(verdict == oracle, "criterion vs containment at case " + std::to_string(n));
        if (!verdict) continue;
        ++positives;
        auto big = ValDesc::monomial(a, ExtScalar::fin(g));
        auto small = ValDesc::monomial(a2, ExtScalar::fin(g2));
        for (int k = 0; k < 100; ++k) {
            auto h = sample_poly(f, rng(), static_cast<unsigned>(k % 4), 2);
            c.expect(val_apply(small, h) <= val_apply(big, h), "pointwise <= fails on " + to_string(h));
        }
    }
    c.expect(positives >= 100, "too few positive cases");
    return c.done("500 cases, " + std::to_string(positives) + " positive");
}

Outcome criterion_3() {
    Check c;
    std::mt19937_64 rng(3);
    for (const auto& f : all_fields()) {
        std::vector<PolyPair> pairs;
        for (int n = 0; n < 500; ++n) {
            pairs.emplace_back(sample_poly(f, rng(), static_cast<unsigned>(rng() % 4), 2),
                               sample_poly(f, rng(), static_cast<unsigned>(rng() % 4), 2));
        }
        auto d = ValDesc::monomial(sample(f, rng(), 2), ExtScalar::fin(random_value(f, rng)));
        auto rep = check_axioms(d, pairs);
        c.expect(rep.ok() && rep.pairs_checked == 500, to_string(f) + ": " + rep.counterexample.value_or("short run"));
    }
    return c.done("V1, V2 on 500 pairs and V3, on 9 fields");
}

Outcome criterion_4() {
    Check c;
    std::mt19937_64 rng(4);
    for (const auto& f : all_fields()) {
        for (int n = 0; n < 500; ++n) {
            unsigned dq = 1 + static_cast<unsigned>(rng() % 3);
            PolyK q = PolyK::monomial(KElem::from_int(f, 1), dq) + sample_poly(f, rng(), dq - 1, 2);
            PolyK g = sample_poly(f, rng(), static_cast<unsigned>(rng() % 9), 2);
            auto parts = q_expansion(g, q);
            bool ok = reassemble(parts, q) == g;
            for (const auto& part : parts) ok = ok && part.degree() < static_cast<long>(dq);
            c.expect(ok, "expansion of " + to_string(g) + " by " + to_string(q));
        }
    }
    return c.done("500 expansions on each of 9 fields");
}

Outcome criterion_5() {
    Check c;
    std::mt19937_64 rng(5);
    auto rnd_rat = [&]() { return make_rat(Int(static_cast<long>(rng() % 21) - 10), Int(1 + static_cast<long>(rng() % 4))); };
    for (auto kind : {CutId::Kind::Below, CutId::Kind::Above, CutId::Kind::PlusInf}) {
        CutId cut = kind == CutId::Kind::Below   ? CutId::below(rnd_rat())
                    : kind == CutId::Kind::Above ? CutId::above(rnd_rat())
                                                 : CutId::plus_inf();
        auto elem = [&]() {
            if (rng() % 10 == 0) return ExtScalar::fin(rnd_rat());
            return ExtScalar::cut_lin(cut, Int(static_cast<long>(rng() % 7) - 3), rnd_rat());
        };
        auto sgn = [](std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); };
        for (int n = 0; n < 1000; ++n) {
            ExtScalar a = elem(), b = elem(), d = elem();
            int ab = sgn(ext_cmp(a, b)), ba = sgn(ext_cmp(b, a));
            c.expect(ab == -ba && ((ab == 0) == (a == b)), "antisymmetry " + str(a) + " " + str(b));
            if (a <= b && b <= d) c.expect(a <= d, "transitivity " + str(a) + " " + str(b) + " " + str(d));
            c.expect(sgn(ext_cmp(a + d, b + d)) == ab, "translation " + str(a) + " " + str(b) + " " + str(d));
        }
        ExtScalar x = ExtScalar::unit(cut);
        for (int n = 0; n < 100; ++n) {
            Rat r = rnd_rat();
            if (n == 0 && kind != CutId::Kind::PlusInf) r = cut.point();
            bool left = kind == CutId::Kind::PlusInf || (kind == CutId::Kind::Below ? r < cut.point() : r <= cut.point());
            ExtScalar re = ExtScalar::fin(r);
            c.expect(left ? re < x : x < re, "x_" + to_string(cut) + " against " + to_string(r));
        }
        c.expect(x < ExtScalar::infinity(), "x below infinity");
    }
    return c.done("1000 triples and 100 rationals per cut kind");
}

Outcome criterion_6() {
    Check c;
    for (unsigned p : {2u, 3u}) {
        auto h = FieldSpec::perfect_hull(p);
        auto seq = artin_schreier_nt(h);
        const PolyK& F = seq.witness()->F;
        Int pk(1);
        for (std::size_t i = 0; i <= 5; ++i) {
            pk *= p;
            KElem val = poly_eval(F, seq.element(i));
            c.expect(k_val(val) == ValueQ(Rat(pk)), "v(F(a_" + std::to_string(i) + ")) = " + to_string(k_val(val)));
            c.expect(val == KElem::t_power(h, Rat(pk)), "F(a_i) is not a power of t");
        }
        auto r = psi(seq);
        c.expect(r.type == ValType::NT, "class " + to_string(r.type));
        c.expect(val_apply(r.desc, F).is_infinity(), "value of F is " + str(val_apply(r.desc, F)));
    }
    return c.done("p = 2, 3, i <= 5");
}

Outcome criterion_7() {
    Check c;
    for (unsigned p : {2u, 3u}) {
        auto h = FieldSpec::perfect_hull(p);
        auto seq = artin_schreier_vt(h);
        const PolyK& F = seq.witness()->F;
        Int pk(1);
        for (std::size_t i = 0; i <= 5; ++i) {
            KElem val = poly_eval(F, seq.element(i));
            c.expect(k_val(val) == ValueQ(make_rat(Int(-1), pk)), "v(F(a_" + std::to_string(i) + ")) = " +
                                                                     to_string(k_val(val)));
            pk *= p;
        }
        auto r = psi(seq);
        c.expect(r.gamma && to_string(*r.gamma) == "0-", "gamma prints as " + (r.gamma ? str(*r.gamma) : "none"));
        c.expect(r.type == ValType::VT, "class " + to_string(r.type));
        c.expect(val_apply(r.desc, F) == ExtScalar::unit(CutId::below(Rat(0))), "mu(F) = " + str(val_apply(r.desc, F)));
    }
    return c.done("p = 2, 3, i <= 5");
}

Outcome criterion_8() {
    Check c;
    std::mt19937_64 rng(8);
    for (unsigned p : {2u, 3u}) {
        auto h = FieldSpec::perfect_hull(p);
        auto r = psi(rt_example(h));
        c.expect(r.desc.kind() == ValDesc::Kind::Monomial && r.desc.center() == KElem::t_power(h, Rat(1)) &&
                     r.desc.gamma() == ExtScalar::fin(Rat(2)),
                 "psi gave " + to_string(r.desc));
        auto direct = ValDesc::monomial(KElem::t_power(h, Rat(1)), ExtScalar::fin(Rat(2)));
        for (int k = 0; k < 50; ++k) {
            auto g = sample_poly(h, rng(), static_cast<unsigned>(k % 5), 2);
            c.expect(val_apply(r.desc, g) == val_apply(direct, g), "disagreement on " + to_string(g));
        }
    }
    return c.done("Monomial(t, 2), 50 polynomials for p = 2, 3");
}

Outcome criterion_9() {
    Check c;
    std::mt19937_64 rng(9);
    auto h = FieldSpec::perfect_hull(2);
    auto seq = random_series(h, 2024);
    SeqPrefix prefix(seq, 31);
    std::vector<std::pair<PolyK, ExtScalar>> stable;
    for (int k = 0; k < 50; ++k) {
        auto g = sample_poly(h, rng(), 1 + static_cast<unsigned>(k % 3), 2);
        try {
            stable.emplace_back(g, stable_value(prefix, g, 3).value);
        } catch (const Error& e) {
            c.expect(false, to_string(g) + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i + 1 < stable.size(); ++i) {
        const auto& [f, vf] = stable[i];
        const auto& [g, vg] = stable[i + 1];
        try {
            c.expect(stable_value(prefix, f * g, 3).value == vf + vg, "multiplicativity on " + to_string(f * g));
        } catch (const Error& e) {
            c.expect(false, to_string(f * g) + ": " + e.what());
        }
    }
    return c.done(std::to_string(stable.size()) + " of 50 stabilized, prefix 30, window 3");
}

Outcome criterion_10() {
    Check c;
    std::mt19937_64 rng(10);
    for (int n = 0; n < 200; ++n) {
        std::size_t lines = 2 + rng() % 4;
        std::vector<Rat> betas;
        std::vector<long> ts;
        std::vector<long> pool{1, 2, 3, 4, 5};
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t l = 0; l < lines; ++l) {
            betas.emplace_back(static_cast<long>(rng() % 21) - 10);
            ts.push_back(pool[l]);
        }
        Rat q(static_cast<long>(rng() % 11) - 5);
        int kind = n % 3;
        ExtScalar limit = kind == 0   ? ExtScalar::unit(CutId::below(q))
                          : kind == 1 ? ExtScalar::unit(CutId::above(q))
                                      : ExtScalar::unit(CutId::plus_inf());
        std::size_t chosen = 0;
        try {
            chosen = select_dominant(betas, ts, limit);
        } catch (const Error& e) {
            c.expect(false, std::string("instance ") + std::to_string(n) + ": " + e.what());
            continue;
        }
        for (long i = 50; i <= 60; ++i) {
            Rat g = kind == 0 ? q - make_rat(Int(1), Int(i)) : kind == 1 ? q + make_rat(Int(1), Int(i)) : Rat(i);
            std::size_t best = 0;
            for (std::size_t l = 1; l < lines; ++l) {
                if (betas[l] + Rat(ts[l]) * g < betas[best] + Rat(ts[best]) * g) best = l;
            }
            c.expect(best == chosen, "instance " + std::to_string(n) + " at i = " + std::to_string(i));
        }
    }
    return c.done("200 instances, tail i = 50..60");
}

KElem with_value(const KElem& u, const Rat& target) {
    return u * element_of_value(u.field(), target - k_val(u).value());
}

Outcome criterion_11() {
    Check c;
    std::mt19937_64 rng(11);
    auto h = FieldSpec::perfect_hull(2);
    const unsigned p = 2;

    // vt: F + h with nu(h) >= 0 is again a key polynomial for the same limit.
    auto vt = artin_schreier_vt(h);
    const PolyK& F = vt.witness()->F;
    auto base = psi(vt);
    for (int n = 0; n < 20; ++n) {
        PolyK pert(h);
        for (unsigned j = 0; j < p; ++j) {
            KElem u = sample(h, rng(), 2);
            if (u.is_zero()) continue;
            pert = pert + PolyK::monomial(with_value(u, Rat(static_cast<long>(j + 1 + rng() % 2))), j);
        }
        auto other = psi(vt.with_witness(AlgWitness{F + pert, vt.witness()->limit, {}}));
        for (int k = 0; k < 100; ++k) {
            auto g = sample_poly(h, rng(), static_cast<unsigned>(k % 5), 2);
            c.expect(val_apply(base.desc, g) == val_apply(other.desc, g),
                     "vt: F + " + to_string(pert) + " differs on " + to_string(g));
        }
    }

    // nt: every F + h with h != 0 of lower degree is fixed by the sequence,
    // so no second key polynomial exists to compare against.
    auto nt = artin_schreier_nt(h);
    const PolyK& G = nt.witness()->F;
    std::size_t rejected = 0;
    for (int n = 0; n < 20; ++n) {
        PolyK pert = sample_poly(h, rng(), static_cast<unsigned>(n % p), 2);
        if (pert.is_zero()) pert = PolyK::constant(KElem::from_int(h, 1));
        try {
            (void)psi(nt.with_witness(AlgWitness{G + pert, nt.witness()->limit, {}}));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InvalidWitness) ++rejected;
        }
    }
    c.expect(rejected == 20, "nt: a perturbed key polynomial was accepted");
    return c.done("vt: 20 perturbations x 100 polynomials; nt: 20 of 20 perturbations are not key polynomials");
}

Outcome criterion_12() {
    Check c;
    std::mt19937_64 rng(12);
    for (unsigned p : {2u, 3u}) {
        auto h = FieldSpec::perfect_hull(p);
        auto seq = artin_schreier_nt(h);
        auto prefix = std::make_shared<const SeqPrefix>(seq, 9);
        CoefficientEvaluator base = [prefix](const PolyK& g) { return stable_value(*prefix, g).value; };
        const PolyK& F = seq.witness()->F;
        for (int n = 0; n < 20; ++n) {
            PolyK pert = sample_poly(h, rng(), static_cast<unsigned>(n % p), 2);
            if (pert.is_zero()) pert = PolyK::constant(KElem::from_int(h, 1));
            auto mu = ValDesc::augmented(F + pert, ExtScalar::infinity(), base);
            ExtScalar got = val_apply(mu, F);
            c.expect(got.is_fin() && got == base(pert), "mu_{F+h}(F) = " + str(got) + " for h = " + to_string(pert));
        }
    }
    return c.done("20 perturbations for p = 2, 3");
}

Outcome criterion_13() {
    Check c;
    std::mt19937_64 rng(13);
    auto h = FieldSpec::perfect_hull(2);
    std::vector<std::pair<std::string, PCSeq>> golden{{"nt", artin_schreier_nt(h)},
                                                       {"vt", artin_schreier_vt(h)},
                                                       {"rt", rt_example(h)},
                                                       {"al", random_series(h, 2024)}};
    for (const auto& [name, seq] : golden) {
        AnalysisOptions opts;
        if (name == "al") opts.upto = 30;
        auto A = iota(seq);
        auto direct = psi(seq, opts);
        auto via = phi(A, opts);
        c.expect(direct.type == via.type, name + ": class " + to_string(via.type));
        for (int k = 0; k < 50; ++k) {
            auto g = sample_poly(h, rng(), static_cast<unsigned>(k % 4), 2);
            c.expect(val_apply(direct.desc, g) == val_apply(via.desc, g), name + ": disagreement on " + to_string(g));
        }
        auto re = realize(A);
        std::size_t n = seq.has_generator() ? 8 : seq.prefix().size();
        auto g1 = validate_pcs(seq.elements(n));
        auto g2 = validate_pcs(re.elements(n));
        c.expect(g1 == g2, name + ": radii of the realized sequence differ");
    }
    return c.done("four golden sequences, 50 polynomials each");
}

Outcome criterion_14() {
    Check c;
    std::mt19937_64 rng(14);
    auto h = FieldSpec::perfect_hull(2);
    std::size_t principal = 0;
    while (principal < 50) {
        Ball a = make_ball(sample(h, rng(), 2), random_value(h, rng));
        Ball b = rng() % 2 ? make_ball(a.center + random_of_value(h, random_value(h, rng), rng), random_value(h, rng))
                           : make_ball(sample(h, rng(), 2), random_value(h, rng));
        if (ball_equal(a, b)) continue;
        ++principal;
        auto A = ApproxType::principal(a), B = ApproxType::principal(b);
        auto sep = find_separating_polynomial(phi(A).desc, phi(B).desc, separating_candidates(A, B));
        c.expect(sep.has_value(), "no separating polynomial for " + to_string(a) + " and " + to_string(b));
    }
    std::vector<ApproxType> gen;
    for (long s : {0L, 1L, 2L, 3L, -1L}) gen.push_back(iota(artin_schreier_vt(h, Rat(s))));
    std::vector<PsiResult> vals;
    for (const auto& A : gen) vals.push_back(phi(A));
    std::size_t generated = 0;
    for (std::size_t i = 0; i < gen.size(); ++i) {
        for (std::size_t j = i + 1; j < gen.size(); ++j) {
            ++generated;
            auto sep = find_separating_polynomial(vals[i].desc, vals[j].desc, separating_candidates(gen[i], gen[j]));
            c.expect(sep.has_value(), "no separating polynomial for shifts " + std::to_string(i) + ", " +
                                          std::to_string(j));
        }
    }
    return c.done(std::to_string(principal) + " principal and " + std::to_string(generated) + " generated pairs");
}

}  // namespace

int main() {
    std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"ball algebra", criterion_1},
        {"monomial comparison", criterion_2},
        {"valuation axioms", criterion_3},
        {"q-expansion round-trip", criterion_4},
        {"order on Q(delta)", criterion_5},
        {"golden nt", criterion_6},
        {"golden vt", criterion_7},
        {"golden rt", criterion_8},
        {"random series", criterion_9},
        {"dominance along a tail", criterion_10},
        {"independence of the key polynomial", criterion_11},
        {"infinite augmentation uniqueness", criterion_12},
        {"psi = phi o iota", criterion_13},
        {"phi separates types", criterion_14},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s [%.0f ms]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), ms);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
