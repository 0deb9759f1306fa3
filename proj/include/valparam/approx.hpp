#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "valparam/pcs.hpp"

namespace valparam {

/// Closed ball B(a, gamma) = {b in K : v(b - a) >= gamma}.
struct Ball {
    KElem center;
    Rat radius;
};

/// Throws ValueNotInGroup unless the radius is a value of the field.
Ball make_ball(const KElem& center, const Rat& radius);

/// Same set of elements: equal radii and v(a - b) >= radius.
bool ball_equal(const Ball& a, const Ball& b);
bool ball_member(const KElem& b, const Ball& B);
/// B(a, g) inside B(a', g') iff g >= g' and v(a - a') >= g'.
bool ball_contains(const Ball& inner, const Ball& outer);
/// center + element_of_value(radius).
KElem ball_witness_at_radius(const Ball& B);
/// An element of outer outside inner. Throws NotStrictlyNested.
KElem separating_point(const Ball& inner, const Ball& outer);

std::string to_string(const Ball& b);

using Nest = std::function<Ball(std::size_t)>;

// Approximation type, stored as a defining nest: the closure of one ball
// (Principal), or of a strictly decreasing nest indexed by 0, 1, 2, ...
// (Generated). A Generated type keeps the algebraic witness and the radius
// limit of the sequence it came from, when known.
class ApproxType {
public:
    enum class Kind { Principal, Generated };

    static ApproxType principal(const Ball& b);
    static ApproxType generated(const FieldSpec& field, Nest nest, std::optional<AlgWitness> witness = std::nullopt,
                                std::optional<QuasiCut> radius_limit = std::nullopt);

    Kind kind() const { return kind_; }
    const FieldSpec& field() const { return field_; }
    /// Principal: the ball itself for every i.
    Ball ball(std::size_t i) const;
    const std::optional<AlgWitness>& witness() const { return witness_; }
    const std::optional<QuasiCut>& radius_limit() const { return radius_limit_; }

private:
    ApproxType(Kind kind, const FieldSpec& field) : kind_(kind), field_(field) {}
    Kind kind_;
    FieldSpec field_;
    std::optional<Ball> last_;
    Nest nest_;
    std::optional<AlgWitness> witness_;
    std::optional<QuasiCut> radius_limit_;
};

std::string to_string(const ApproxType& A, std::size_t shown = 3);

/// Closure of the balls B(a_i, gamma_i) of the sequence.
ApproxType iota(const PCSeq& seq);

enum class Containment { Contained, NotContained, BudgetExhausted };

std::string to_string(Containment c);

/// Whether B belongs to A, scanning nest indices 0..budget.
Containment appr_contains(const ApproxType& A, const Ball& B, std::size_t budget);

/// A sequence whose balls define A: picks a_i in A_i minus A_{i+1}.
PCSeq realize(const ApproxType& A);

PsiResult phi(const ApproxType& A, const AnalysisOptions& opts = {});

/// The approximation type of v_{a,gamma}.
ApproxType appr_of_monomial(const KElem& a, const Rat& gamma);

/// Quasi-cut of radii of balls in A. Throws UndeterminedSup for a Generated
/// type without a known radius limit.
QuasiCut supp_descr(const ApproxType& A);

ValType classify_appr(const ApproxType& A);

/// Mutual cofinality of the first n balls of each nest (a lookahead of n
/// more balls is allowed on either side).
bool appr_equal_on_prefix(const ApproxType& A, const ApproxType& B, std::size_t n);

/// Polynomials likely to tell the valuations of two types apart: x - c for
/// the first ball centers, and the witness key polynomials.
std::vector<PolyK> separating_candidates(const ApproxType& A, const ApproxType& B, std::size_t depth = 3);

}  // namespace valparam
