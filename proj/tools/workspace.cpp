#include "workspace.hpp"

#include <fstream>

#include "valparam/error.hpp"

namespace valparam::cli {

using nlohmann::json;

namespace {

std::string text_of(const json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(ErrorKind::Parse, std::string(what) + " must be a string");
}

std::vector<Coeff> digits(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array of digits");
    std::vector<Coeff> out;
    for (const auto& d : j) {
        if (!d.is_number_unsigned()) throw Error(ErrorKind::Parse, std::string(what) + " digits must be nonnegative");
        out.push_back(static_cast<Coeff>(d.get<std::uint64_t>()));
    }
    return out;
}

std::optional<AlgWitness> witness_of(const FieldSpec& f, const json& w) {
    if (w.is_null()) return std::nullopt;
    if (!w.is_object() || !w.contains("F") || !w.contains("limit")) {
        throw Error(ErrorKind::Parse, "a witness needs \"F\" and \"limit\"");
    }
    return AlgWitness{parse_poly(f, text_of(w["F"], "F")), parse_quasicut(text_of(w["limit"], "limit")), {}};
}

}  // namespace

Workspace Workspace::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    return from_json(doc);
}

Workspace Workspace::from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("field")) throw Error(ErrorKind::Parse, "workspace needs a \"field\"");
    const json& fj = doc["field"];
    if (!fj.is_object() || !fj.contains("kind") || !fj.contains("p") || !fj["p"].is_number_unsigned()) {
        throw Error(ErrorKind::Parse, "field must look like {\"kind\": \"perfect_hull\", \"p\": 2}");
    }
    Workspace ws(FieldSpec(parse_field_kind(fj["kind"].get<std::string>()), fj["p"].get<std::uint64_t>()));

    if (doc.contains("polynomials")) {
        for (const auto& [name, lit] : doc["polynomials"].items()) {
            ws.polys_.emplace(name, parse_poly(ws.field_, text_of(lit, "polynomial")));
        }
    }
    if (doc.contains("sequences")) {
        for (const auto& [name, spec] : doc["sequences"].items()) ws.sequences_.emplace(name, ws.build_sequence(spec));
    }
    if (doc.contains("seq")) {
        json spec = doc["seq"].is_array() ? json{{"elements", doc["seq"]}} : doc["seq"];
        if (doc.contains("witness")) spec["witness"] = doc["witness"];
        ws.sequences_.insert_or_assign("main", ws.build_sequence(spec));
    }
    if (doc.contains("valuations")) {
        for (const auto& [name, spec] : doc["valuations"].items()) {
            if (!spec.is_object() || spec.size() != 1) {
                throw Error(ErrorKind::Parse, "valuation '" + name + "' needs exactly one of monomial, augmented, psi");
            }
            ws.valuations_.emplace(name, spec);
        }
    }
    return ws;
}

PCSeq Workspace::build_sequence(const json& spec) const {
    if (spec.is_array()) return build_sequence(json{{"elements", spec}});
    if (!spec.is_object()) throw Error(ErrorKind::Parse, "a sequence is an array of elements or an object");

    std::optional<PCSeq> seq;
    if (spec.contains("elements")) {
        std::vector<KElem> elems;
        for (const auto& e : spec["elements"]) elems.push_back(parse_elem(field_, text_of(e, "element")));
        validate_pcs(elems);
        seq.emplace(field_, std::move(elems));
    } else if (spec.contains("builtin")) {
        const std::string b = spec["builtin"].get<std::string>();
        if (b == "artin_schreier_nt") {
            seq.emplace(artin_schreier_nt(field_));
        } else if (b == "artin_schreier_vt") {
            Rat shift(0);
            if (spec.contains("shift")) shift = parse_rat(text_of(spec["shift"], "shift"));
            seq.emplace(artin_schreier_vt(field_, shift));
        } else if (b == "periodic_series") {
            seq.emplace(periodic_series(field_, spec.contains("pre") ? digits(spec["pre"], "pre") : std::vector<Coeff>{},
                                        digits(spec.value("period", json::array()), "period")));
        } else if (b == "random_series") {
            seq.emplace(random_series(field_, spec.value("seed", std::uint64_t{0})));
        } else if (b == "rt_example") {
            seq.emplace(rt_example(field_));
        } else {
            throw Error(ErrorKind::Parse, "unknown builtin sequence '" + b + "'");
        }
    } else {
        throw Error(ErrorKind::Parse, "a sequence needs \"elements\" or \"builtin\"");
    }
    if (spec.contains("witness")) *seq = seq->with_witness(witness_of(field_, spec["witness"]));
    if (spec.contains("gamma_limit")) {
        *seq = seq->with_gamma_limit(parse_quasicut(text_of(spec["gamma_limit"], "gamma_limit")));
    }
    return *seq;
}

const PCSeq& Workspace::sequence(const std::string& name) const {
    auto it = sequences_.find(name);
    if (it == sequences_.end()) throw Error(ErrorKind::InvalidArgument, "no sequence named '" + name + "'");
    return it->second;
}

ValDesc Workspace::valuation(const std::string& name, const AnalysisOptions& opts) const {
    auto it = valuations_.find(name);
    if (it == valuations_.end()) {
        // A bare sequence name stands for its valuation.
        if (sequences_.count(name)) return psi(sequence(name), opts).desc;
        throw Error(ErrorKind::InvalidArgument, "no valuation or sequence named '" + name + "'");
    }
    const json& spec = it->second;
    const auto& [kind, body] = *spec.items().begin();
    if (kind == "monomial") {
        ExtScalar g = parse_ext(text_of(body.at("gamma"), "gamma"));
        if (g.is_cut()) throw Error(ErrorKind::InvalidArgument, "a monomial valuation needs a rational or infinite radius");
        return ValDesc::monomial(parse_elem(field_, text_of(body.at("a"), "a")), g);
    }
    if (kind == "psi") return psi(sequence(text_of(body, "psi")), opts).desc;
    if (kind == "augmented") {
        const PCSeq& over = sequence(text_of(body.at("over"), "over"));
        auto prefix = std::make_shared<const SeqPrefix>(over, std::max<std::size_t>(opts.upto + 1, 3));
        const std::size_t window = opts.window;
        CoefficientEvaluator base = [prefix, window](const PolyK& g) { return stable_value(*prefix, g, window).value; };
        PolyK F = polynomial(text_of(body.at("F"), "F"));
        std::vector<Rat> nu;
        for (const auto& v : family_values(*prefix, F)) {
            if (v.is_fin()) nu.push_back(v.offset());
        }
        return ValDesc::augmented(F, parse_ext(text_of(body.at("gamma"), "gamma")), std::move(base), nu);
    }
    throw Error(ErrorKind::Parse, "unknown valuation form '" + kind + "'");
}

PolyK Workspace::polynomial(const std::string& name_or_literal) const {
    auto it = polys_.find(name_or_literal);
    if (it != polys_.end()) return it->second;
    return parse_poly(field_, name_or_literal);
}

}  // namespace valparam::cli
