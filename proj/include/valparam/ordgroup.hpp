#pragma once

// Rank-one value groups: rationals, quasi-cuts of Q and the cut-extension
// groups Q(delta) = Z*x_delta + Q, plus an adjoined maximum "inf".

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "valparam/rational.hpp"

namespace valparam {

/// A cut of Q. Below(q) has right set [q, oo), Above(q) has left set
/// (-oo, q], PlusInf is (Q, {}).
class CutId {
public:
    enum class Kind { Below, Above, PlusInf };

    static CutId below(Rat q) { return CutId(Kind::Below, std::move(q)); }
    static CutId above(Rat q) { return CutId(Kind::Above, std::move(q)); }
    static CutId plus_inf() { return CutId(Kind::PlusInf, Rat(0)); }

    Kind kind() const { return kind_; }
    // Boundary rational; meaningless for PlusInf.
    const Rat& point() const { return q_; }

    friend bool operator==(const CutId& a, const CutId& b) {
        return a.kind_ == b.kind_ && (a.kind_ == Kind::PlusInf || a.q_ == b.q_);
    }

private:
    CutId(Kind k, Rat q) : kind_(k), q_(std::move(q)) {}
    Kind kind_;
    Rat q_;
};

/// Element of Q(delta) extended by a maximum: Fin(b), m*x_delta + b with
/// m != 0, or Infinity.
class ExtScalar {
public:
    enum class Kind { Fin, CutLin, Infinity };

    ExtScalar() : ExtScalar(Rat(0)) {}
    ExtScalar(Rat b) : kind_(Kind::Fin), cut_(CutId::plus_inf()), m_(0), b_(std::move(b)) {}  // NOLINT

    static ExtScalar fin(Rat b) { return ExtScalar(std::move(b)); }
    static ExtScalar infinity();
    /// m*x_cut + b; collapses to Fin(b) when m == 0.
    static ExtScalar cut_lin(const CutId& cut, Int m, Rat b);
    /// The formal element x_cut itself.
    static ExtScalar unit(const CutId& cut) { return cut_lin(cut, Int(1), Rat(0)); }

    Kind kind() const { return kind_; }
    bool is_fin() const { return kind_ == Kind::Fin; }
    bool is_cut() const { return kind_ == Kind::CutLin; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }

    // Valid only for CutLin.
    const CutId& cut() const { return cut_; }
    // Zero for Fin.
    const Int& multiplier() const { return m_; }
    // The rational component; for Fin this is the value itself.
    const Rat& offset() const { return b_; }

    friend bool operator==(const ExtScalar& a, const ExtScalar& b);

private:
    Kind kind_;
    CutId cut_;
    Int m_;
    Rat b_;
};

/// Total order on elements sharing at most one cut. Throws MixedCuts otherwise.
std::strong_ordering ext_cmp(const ExtScalar& a, const ExtScalar& b);
ExtScalar ext_add(const ExtScalar& a, const ExtScalar& b);
/// n-fold sum; ext_scale(0, a) is Fin(0) for every a, including Infinity.
ExtScalar ext_scale(const Int& n, const ExtScalar& a);
ExtScalar ext_min(const ExtScalar& a, const ExtScalar& b);

inline ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) { return ext_add(a, b); }
inline bool operator<(const ExtScalar& a, const ExtScalar& b) { return ext_cmp(a, b) < 0; }
inline bool operator<=(const ExtScalar& a, const ExtScalar& b) { return ext_cmp(a, b) <= 0; }
inline bool operator>(const ExtScalar& a, const ExtScalar& b) { return ext_cmp(a, b) > 0; }
inline bool operator>=(const ExtScalar& a, const ExtScalar& b) { return ext_cmp(a, b) >= 0; }

std::string to_string(const CutId& cut);
CutId parse_cut(std::string_view text);

/// Text forms: "5/6", "inf", "0-", "0+", "inf-", "2*(0-)+1", "-(1/2+)-3".
std::string to_string(const ExtScalar& x);
ExtScalar parse_ext(std::string_view text);
inline std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << to_string(x); }

/// Quasi-cut of Q: a principal quasi-cut at q, or a genuine cut.
class QuasiCut {
public:
    static QuasiCut principal(Rat q) { return QuasiCut(std::move(q)); }
    static QuasiCut gap(CutId cut) { return QuasiCut(std::move(cut)); }

    bool is_principal() const { return principal_; }
    const Rat& point() const { return q_; }
    const CutId& cut() const { return cut_; }

    friend bool operator==(const QuasiCut& a, const QuasiCut& b) {
        if (a.principal_ != b.principal_) return false;
        return a.principal_ ? a.q_ == b.q_ : a.cut_ == b.cut_;
    }

private:
    explicit QuasiCut(Rat q) : principal_(true), q_(std::move(q)), cut_(CutId::plus_inf()) {}
    explicit QuasiCut(CutId c) : principal_(false), q_(0), cut_(std::move(c)) {}
    bool principal_;
    Rat q_;
    CutId cut_;
};

std::strong_ordering quasicut_cmp(const QuasiCut& a, const QuasiCut& b);
std::string to_string(const QuasiCut& c);
/// "2" for a principal quasi-cut, a cut literal ("0-", "inf-") otherwise;
/// "inf" is accepted as a synonym for the top cut.
QuasiCut parse_quasicut(std::string_view text);

/// The element of the extended group realizing the quasi-cut: Fin(q) or x_cut.
ExtScalar realize(const QuasiCut& c);
/// Inverse of realize on Fin and unit cut elements; Infinity maps to the top cut.
QuasiCut quasicut_of(const ExtScalar& x);

/// Supremum of a nondecreasing list of values, using the declared limit when
/// given. Without a declaration the list must visibly stabilize.
ExtScalar sup_of_values(std::span<const Rat> values, const std::optional<QuasiCut>& declared_limit);

}  // namespace valparam
