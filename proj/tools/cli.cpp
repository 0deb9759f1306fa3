#include "cli.hpp"

#include <algorithm>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "valparam/error.hpp"
#include "workspace.hpp"

namespace valparam::cli {

using nlohmann::json;

namespace {

struct Globals {
    std::string input;
    std::size_t budget = 8;
    std::size_t window = 3;
    unsigned degree_bound = 3;
    std::string format = "text";

    bool as_json() const { return format == "json"; }
    AnalysisOptions options() const {
        AnalysisOptions o;
        o.upto = budget;
        o.window = window;
        o.degree_bound = degree_bound;
        return o;
    }
};

Workspace workspace(const Globals& g) {
    if (g.input.empty()) throw Error(ErrorKind::InvalidArgument, "this command needs --input <file>");
    return Workspace::load(g.input);
}

void emit(const Globals& g, std::ostream& out, const json& j, const std::vector<std::string>& lines) {
    if (g.as_json()) {
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& l : lines) out << l << "\n";
}

std::optional<std::pair<PolyK, std::pair<ExtScalar, ExtScalar>>> separate(const ValDesc& a, const ValDesc& b,
                                                                           const std::vector<PolyK>& cands) {
    auto f = find_separating_polynomial(a, b, cands);
    if (!f) return std::nullopt;
    return std::make_pair(*f, std::make_pair(val_apply(a, *f), val_apply(b, *f)));
}

int cmd_eval(const Globals& g, std::ostream& out, const std::string& vname, const std::string& ftext) {
    Workspace ws = workspace(g);
    PolyK f = ws.polynomial(ftext);
    ExtScalar v = val_apply(ws.valuation(vname, g.options()), f);
    emit(g, out, {{"valuation", vname}, {"polynomial", to_string(f)}, {"value", to_string(v)}}, {to_string(v)});
    return Ok;
}

int cmd_compare(const Globals& g, std::ostream& out, const std::string& an, const std::string& bn) {
    Workspace ws = workspace(g);
    ValDesc a = ws.valuation(an, g.options());
    ValDesc b = ws.valuation(bn, g.options());

    std::string relation = "unknown";
    auto is_finite_monomial = [](const ValDesc& d) {
        return d.kind() == ValDesc::Kind::Monomial && d.gamma().is_fin();
    };
    if (is_finite_monomial(a) && is_finite_monomial(b)) {
        const Rat &ga = a.gamma().offset(), &gb = b.gamma().offset();
        bool a_le_b = monomial_cmp(b.center(), gb, a.center(), ga) == MonomialOrder::LeqHolds;
        bool b_le_a = monomial_cmp(a.center(), ga, b.center(), gb) == MonomialOrder::LeqHolds;
        relation = a_le_b && b_le_a ? "equal" : a_le_b ? an + " <= " + bn : b_le_a ? bn + " <= " + an : "incomparable";
    }

    std::vector<PolyK> cands;
    for (const auto& [name, f] : ws.polynomials()) cands.push_back(f);
    for (const ValDesc* d : {&a, &b}) {
        if (d->kind() == ValDesc::Kind::Monomial) cands.push_back(PolyK::x_minus(d->center()));
        if (d->kind() == ValDesc::Kind::Augmented) cands.push_back(d->key());
    }
    for (unsigned k = 1; k <= g.degree_bound; ++k) cands.push_back(PolyK::monomial(KElem::from_int(ws.field(), 1), k));

    auto sep = separate(a, b, cands);
    json j{{"relation", relation}, {"candidates", cands.size()}};
    std::vector<std::string> lines{"relation: " + relation};
    if (sep) {
        const auto& [f, vals] = *sep;
        j["separating"] = {{"polynomial", to_string(f)}, {an, to_string(vals.first)}, {bn, to_string(vals.second)}};
        lines.push_back("separating: " + to_string(f) + " (" + to_string(vals.first) + " vs " + to_string(vals.second) +
                        ")");
    } else {
        j["separating"] = nullptr;
        lines.push_back("separating: none among " + std::to_string(cands.size()) + " candidates");
    }
    emit(g, out, j, lines);
    return Ok;
}

int cmd_classify(const Globals& g, std::ostream& out, const std::string& sname) {
    Workspace ws = workspace(g);
    const PCSeq& seq = ws.sequence(sname);
    AnalysisOptions opts = g.options();
    for (const auto& [name, f] : ws.polynomials()) opts.probes.push_back(f);

    PsiResult r = [&] {
        try {
            return psi(seq, opts);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Inconclusive) throw;
            emit(g, out, {{"class", "Inconclusive"}, {"reason", e.what()}}, {"Inconclusive", std::string("reason: ") + e.what()});
            throw;
        }
    }();

    std::string head = to_string(r.type);
    if (r.gamma) head += ", gamma=" + to_string(*r.gamma);
    json j{{"class", to_string(r.type)},
           {"gamma", r.gamma ? json(to_string(*r.gamma)) : json(nullptr)},
           {"valuation", to_string(r.desc)},
           {"certificate", r.certificate}};
    std::vector<std::string> lines{head, "valuation: " + to_string(r.desc), "certificate: " + r.certificate};
    if (seq.has_generator()) {
        SeqPrefix prefix(seq, std::max<std::size_t>(opts.upto + 1, 3));
        StableValue sx = stable_value(prefix, PolyK::x(seq.field()), opts.window);
        j["onset"] = {{"polynomial", "x"}, {"value", to_string(sx.value)}, {"since", sx.since},
                      {"certificate", to_string(sx.certificate)}};
        lines.push_back("onset: v(x) = " + to_string(sx.value) + " from index " + std::to_string(sx.since) + " (" +
                        to_string(sx.certificate) + ")");
    }
    emit(g, out, j, lines);
    return Ok;
}

int cmd_expand(const Globals& g, std::ostream& out, const std::string& ftext, const std::string& qtext) {
    Workspace ws = workspace(g);
    PolyK f = ws.polynomial(ftext), q = ws.polynomial(qtext);
    auto parts = q_expansion(f, q);
    json arr = json::array();
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        arr.push_back(to_string(parts[i]));
        lines.push_back("f_" + std::to_string(i) + " = " + to_string(parts[i]));
    }
    emit(g, out, {{"polynomial", to_string(f)}, {"q", to_string(q)}, {"parts", arr}}, lines);
    return Ok;
}

int cmd_appr(const Globals& g, std::ostream& out, const std::string& sname, const std::string& center,
             const std::string& radius) {
    Workspace ws = workspace(g);
    ApproxType A = iota(ws.sequence(sname));
    std::string supp;
    try {
        supp = to_string(supp_descr(A));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UndeterminedSup) throw;
        supp = "undetermined";
    }
    json j{{"type", to_string(A)}, {"support", supp}, {"class", to_string(classify_appr(A))}};
    std::vector<std::string> lines{"type: " + to_string(A), "support: " + supp,
                                   "class: " + to_string(classify_appr(A))};
    int code = Ok;
    if (!center.empty()) {
        Ball B = make_ball(parse_elem(ws.field(), center), parse_rat(radius));
        Containment c = appr_contains(A, B, g.budget);
        j["contains"] = {{"ball", to_string(B)}, {"result", to_string(c)}};
        lines.push_back("contains " + to_string(B) + ": " + to_string(c));
        if (c == Containment::BudgetExhausted) code = Inconclusive;
    }
    emit(g, out, j, lines);
    return code;
}

// Golden examples over the perfect hull of F_p.
int cmd_examples(const Globals& g, std::ostream& out, std::uint64_t p, std::size_t depth) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "rejected: " + std::to_string(p) + " is not prime");
    if (depth < 2) throw Error(ErrorKind::InvalidArgument, "depth must be at least 2");
    const FieldSpec h = FieldSpec::perfect_hull(p);
    AnalysisOptions opts = g.options();
    opts.upto = depth;

    json checks = json::array();
    std::vector<std::string> lines;
    std::size_t failed = 0;
    auto check = [&](const std::string& name, const std::string& got, const std::string& want) {
        bool ok = got == want;
        if (!ok) ++failed;
        checks.push_back({{"name", name}, {"got", got}, {"expected", want}, {"pass", ok}});
        lines.push_back(std::string(ok ? "PASS " : "FAIL ") + name + " = " + got + (ok ? "" : " (expected " + want + ")"));
    };

    auto nt = artin_schreier_nt(h);
    Int pk(1);
    for (std::size_t i = 0; i <= depth; ++i) {
        pk *= static_cast<unsigned long>(p);
        check("nt v(F(a_" + std::to_string(i) + "))", to_string(k_val(poly_eval(nt.witness()->F, nt.element(i)))),
              to_string(Rat(pk)));
    }
    auto rn = psi(nt, opts);
    check("nt class", to_string(rn.type), "NT");
    check("nt value of F", to_string(val_apply(rn.desc, nt.witness()->F)), "inf");

    auto vt = artin_schreier_vt(h);
    pk = 1;
    for (std::size_t i = 0; i <= depth; ++i) {
        check("vt v(F(a_" + std::to_string(i) + "))", to_string(k_val(poly_eval(vt.witness()->F, vt.element(i)))),
              to_string(make_rat(Int(-1), pk)));
        pk *= static_cast<unsigned long>(p);
    }
    auto rv = psi(vt, opts);
    check("vt class", to_string(rv.type), "VT");
    check("vt gamma", rv.gamma ? to_string(*rv.gamma) : "none", "0-");
    check("vt value of F", to_string(val_apply(rv.desc, vt.witness()->F)), "0-");

    auto rr = psi(rt_example(h), opts);
    check("rt class", to_string(rr.type), "RT");
    check("rt valuation", to_string(rr.desc), "monomial a=\"t\" gamma=\"2\"");
    check("rt value of x", to_string(val_apply(rr.desc, PolyK::x(h))), "1");

    AnalysisOptions al = opts;
    al.upto = std::max<std::size_t>(depth, 30);
    auto ra = psi(random_series(h, 2024), al);
    check("al class", to_string(ra.type), "AL");

    lines.push_back(failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                                : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed");
    emit(g, out, {{"p", p}, {"depth", depth}, {"checks", checks}, {"failed", failed}}, lines);
    return failed == 0 ? Ok : DomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extensions of valuations to K[x] from pseudo-Cauchy sequences", "valparam"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--input", g.input, "JSON workspace file");
    app.add_option("--budget", g.budget, "Last sequence index examined")->check(CLI::PositiveNumber);
    app.add_option("--window", g.window, "Stability window")->check(CLI::Range(2, 1000));
    app.add_option("--degree-bound", g.degree_bound, "Degree bound for the transcendental search")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::function<int()> action;
    std::string a1, a2, center, radius;
    std::uint64_t p = 0;
    std::size_t depth = 5;

    auto* eval = app.add_subcommand("eval", "Value of a polynomial under a valuation");
    eval->add_option("valuation", a1)->required();
    eval->add_option("polynomial", a2)->required();
    eval->callback([&] { action = [&] { return cmd_eval(g, out, a1, a2); }; });

    auto* compare = app.add_subcommand("compare", "Order relation and a separating polynomial");
    compare->add_option("first", a1)->required();
    compare->add_option("second", a2)->required();
    compare->callback([&] { action = [&] { return cmd_compare(g, out, a1, a2); }; });

    auto* classify = app.add_subcommand("classify", "Type of the valuation attached to a sequence");
    classify->add_option("sequence", a1)->required();
    classify->callback([&] { action = [&] { return cmd_classify(g, out, a1); }; });

    auto* expand = app.add_subcommand("expand", "q-expansion of a polynomial");
    expand->add_option("polynomial", a1)->required();
    expand->add_option("q", a2)->required();
    expand->callback([&] { action = [&] { return cmd_expand(g, out, a1, a2); }; });

    auto* appr = app.add_subcommand("appr", "Approximation type of a sequence");
    appr->add_option("sequence", a1)->required();
    auto* c_opt = appr->add_option("--center", center, "Center of a ball to test");
    appr->add_option("--radius", radius, "Radius of the ball")->needs(c_opt);
    c_opt->needs(appr->get_option("--radius"));
    appr->callback([&] { action = [&] { return cmd_appr(g, out, a1, center, radius); }; });

    auto* examples = app.add_subcommand("examples", "Run the golden examples");
    examples->add_option("--p", p, "Characteristic")->required();
    examples->add_option("--depth", depth, "Prefix depth");
    examples->callback([&] { action = [&] { return cmd_examples(g, out, p, depth); }; });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return DomainError;
    }

    try {
        return action();
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::Inconclusive:
            case ErrorKind::Undetermined:
            case ErrorKind::UndeterminedSup:
                if (e.kind() != ErrorKind::Inconclusive) out << "Inconclusive\n";
                err << e.what() << "\n";
                return Inconclusive;
            default: err << "error: " << e.what() << "\n"; return DomainError;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return DomainError;
    }
}

}  // namespace valparam::cli
