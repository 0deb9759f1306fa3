#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "valparam/ordgroup.hpp"
#include "valparam/poly.hpp"

namespace valparam {

/// Value of a polynomial of degree below the key polynomial; supplied by the
/// stable-value machinery of a sequence. Must be pure.
using CoefficientEvaluator = std::function<ExtScalar(const PolyK&)>;

enum class ValType { RT, VT, NT, AL };

std::string to_string(ValType t);

// Extension of v to K[x], in one of three canonical forms:
//   Monomial(a, gamma)       v_{a,gamma}
//   Augmented(F, gamma, nu)  min_j nu(f_j) + j*gamma over the F-expansion
//   LimitOfFamily(nu)        pointwise stable value of an increasing family
class ValDesc {
public:
    enum class Kind { Monomial, Augmented, LimitOfFamily };

    static ValDesc monomial(const KElem& a, ExtScalar gamma);
    /// Throws NotMonic unless F is monic of degree >= 1, and InvalidWitness if
    /// gamma fails to exceed one of the listed values nu_i(F).
    static ValDesc augmented(const PolyK& F, ExtScalar gamma, CoefficientEvaluator base,
                             std::span<const Rat> family_values_of_F = {});
    /// `note` records the extent of the certification, e.g. "D=3, N=30".
    static ValDesc limit_of_family(const FieldSpec& field, CoefficientEvaluator stable, std::string note);

    Kind kind() const { return kind_; }
    const FieldSpec& field() const { return field_; }
    /// Monomial only.
    const KElem& center() const { return *center_; }
    /// Augmented only.
    const PolyK& key() const { return *key_; }
    /// Monomial and Augmented.
    const ExtScalar& gamma() const { return gamma_; }
    const CoefficientEvaluator& evaluator() const { return eval_; }
    const std::string& note() const { return note_; }

private:
    explicit ValDesc(const FieldSpec& field) : field_(field) {}
    Kind kind_ = Kind::Monomial;
    FieldSpec field_;
    std::optional<KElem> center_;
    std::optional<PolyK> key_;
    ExtScalar gamma_;
    CoefficientEvaluator eval_;
    std::string note_;
};

ExtScalar val_apply(const ValDesc& d, const PolyK& f);

ValType classify(const ValDesc& d);

std::string to_string(const ValDesc& d);

enum class MonomialOrder { LeqHolds, NotLeq };

/// Decides v_{a',gamma'} <= v_{a,gamma}: gamma >= gamma' and v(a' - a) >= gamma'.
MonomialOrder monomial_cmp(const KElem& a, const Rat& gamma, const KElem& a2, const Rat& gamma2);

struct AxiomReport {
    std::size_t pairs_checked = 0;
    /// Empty when every check passed.
    std::optional<std::string> counterexample;
    bool ok() const { return !counterexample.has_value(); }
};

using PolyPair = std::pair<PolyK, PolyK>;

/// V1 (multiplicativity) and V2 (ultrametric inequality) on every pair, and
/// V3 (v(1) = 0, v(0) = inf). Stops at the first counterexample.
AxiomReport check_axioms(const ValDesc& d, std::span<const PolyPair> samples);
AxiomReport check_axioms(const std::function<ExtScalar(const PolyK&)>& nu, const FieldSpec& field,
                         std::span<const PolyPair> samples);

/// First candidate on which the two descriptors take different values.
std::optional<PolyK> find_separating_polynomial(const ValDesc& a, const ValDesc& b,
                                                std::span<const PolyK> candidates);

}  // namespace valparam
