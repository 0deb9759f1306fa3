#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "valparam/approx.hpp"

namespace valparam::cli {

// Named entities over a single field, loaded from a JSON document:
//
//   {
//     "field": {"kind": "perfect_hull", "p": 2},
//     "sequences": {"s": {"builtin": "artin_schreier_vt", "shift": "1"},
//                   "r": {"elements": ["t", "t + t^2"]}},
//     "valuations": {"v": {"monomial": {"a": "t", "gamma": "2"}},
//                    "w": {"psi": "s"}},
//     "polynomials": {"F": "x^2 + x + t"}
//   }
//
// A top-level "seq" (with an optional "witness") is registered as "main".
class Workspace {
public:
    static Workspace from_json(const nlohmann::json& doc);
    static Workspace load(const std::string& path);

    const FieldSpec& field() const { return field_; }
    const std::map<std::string, PCSeq>& sequences() const { return sequences_; }
    const std::map<std::string, PolyK>& polynomials() const { return polys_; }

    const PCSeq& sequence(const std::string& name) const;
    bool has_valuation(const std::string& name) const { return valuations_.count(name) != 0; }
    /// Builds the named valuation; psi-backed entries use opts.
    ValDesc valuation(const std::string& name, const AnalysisOptions& opts) const;
    /// A named polynomial, or a literal.
    PolyK polynomial(const std::string& name_or_literal) const;

private:
    explicit Workspace(const FieldSpec& f) : field_(f) {}
    PCSeq build_sequence(const nlohmann::json& spec) const;

    FieldSpec field_;
    std::map<std::string, PCSeq> sequences_;
    std::map<std::string, nlohmann::json> valuations_;
    std::map<std::string, PolyK> polys_;
};

}  // namespace valparam::cli
