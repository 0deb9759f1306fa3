#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valparam/valuation.hpp"

namespace valparam {

/// index -> a_index. Must be pure.
using Generator = std::function<KElem(std::size_t)>;
/// index -> v(F(a_index)). Must be pure.
using ClosedForm = std::function<Rat(std::size_t)>;

/// Declared algebraic-type data: F monic of least degree not fixed by the
/// sequence, and the limit of v(F(a_i)).
struct AlgWitness {
    PolyK F;
    QuasiCut limit;
    ClosedForm closed_form;
};

// Pseudo-Cauchy sequence: an explicit prefix, optionally extended by a
// generator. Indices start at 0.
class PCSeq {
public:
    /// Throws InvalidArgument for fewer than two prefix entries.
    PCSeq(const FieldSpec& field, std::vector<KElem> prefix, Generator generator = {},
          std::optional<AlgWitness> witness = std::nullopt, std::optional<QuasiCut> gamma_limit = std::nullopt);

    const FieldSpec& field() const { return field_; }
    const std::vector<KElem>& prefix() const { return prefix_; }
    bool has_generator() const { return static_cast<bool>(generator_); }
    const Generator& generator() const { return generator_; }
    const std::optional<AlgWitness>& witness() const { return witness_; }
    /// Declared limit of the radii gamma_i, when known.
    const std::optional<QuasiCut>& gamma_limit() const { return gamma_limit_; }

    /// Throws GeneratorMissing past the prefix of a finite sequence.
    KElem element(std::size_t i) const;
    std::vector<KElem> elements(std::size_t count) const;

    PCSeq with_witness(std::optional<AlgWitness> w) const;
    PCSeq with_gamma_limit(std::optional<QuasiCut> g) const;

private:
    FieldSpec field_;
    std::vector<KElem> prefix_;
    Generator generator_;
    std::optional<AlgWitness> witness_;
    std::optional<QuasiCut> gamma_limit_;
};

/// [gamma_0, ...] with gamma_i = v(a_{i+1} - a_i), after checking
/// v(a_i - a_j) < v(a_j - a_k) for every i < j < k. Throws NotPseudoCauchy.
std::vector<Rat> validate_pcs(std::span<const KElem> prefix);

// Elements a_0..a_{n-1} of a sequence with their radii, computed and
// validated once so that evaluators can share them.
class SeqPrefix {
public:
    SeqPrefix(const PCSeq& seq, std::size_t count);

    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<KElem>& elements() const { return elems_; }
    /// size() - 1 radii.
    const std::vector<Rat>& gammas() const { return gammas_; }

private:
    FieldSpec field_;
    std::vector<KElem> elems_;
    std::vector<Rat> gammas_;
};

struct Certificate {
    enum class Kind { Window, Dominance };
    Kind kind = Kind::Window;
    std::size_t window = 0;  // Window only
};

std::string to_string(const Certificate& c);

struct StabilityReport {
    enum class Kind { UltimatelyConstant, StrictlyIncreasing, Undetermined };
    Kind kind = Kind::Undetermined;
    Rat value;              // UltimatelyConstant
    std::size_t since = 0;  // UltimatelyConstant
    Certificate certificate;
    /// v(f(a_i)) for i = 0..upto.
    std::vector<ValueQ> observed;
};

std::string to_string(const StabilityReport& r);

/// Window analysis of an observed value list: a final constant run of length
/// >= window, or a final strictly increasing run of length >= window + 1.
StabilityReport analyze_values(std::vector<ValueQ> values, std::size_t window);

/// v(f(a_i)) for i <= upto. Throws GeneratorMissing.
StabilityReport value_behavior(const PCSeq& seq, const PolyK& f, std::size_t upto, std::size_t window = 3);

/// nu_i(f) = v_{a_i,gamma_i}(f) for every radius of the prefix.
std::vector<ExtScalar> family_values(const SeqPrefix& prefix, const PolyK& f);

/// argmin_l beta_l + t_l * limit in the extended group. Throws
/// AmbiguousAtLimit when two lines meet exactly at a rational limit.
std::size_t select_dominant(std::span<const Rat> betas, std::span<const long> ts, const ExtScalar& limit);

struct StableValue {
    ExtScalar value;
    Certificate certificate;
    std::size_t since = 0;
};

/// Eventual value of v(f(a_i)). A Dominance certificate is issued at the
/// first index N with v(f(a_N)) < v(d_l f(a_N)) + l*gamma_N for all l >= 1
/// (d_l the Hasse derivatives), which forces v(f(a_j)) = v(f(a_N)) for all
/// j >= N; otherwise the window analysis decides. Throws NotStable or
/// Undetermined.
StableValue stable_value(const SeqPrefix& prefix, const PolyK& f, std::size_t window = 3);
StableValue stable_value(const PCSeq& seq, const PolyK& f, std::size_t upto = 8, std::size_t window = 3);

struct AnalysisOptions {
    std::size_t upto = 8;       // last index examined
    std::size_t window = 3;
    unsigned degree_bound = 3;  // transcendental-type search
    std::size_t samples = 8;    // random polynomials per degree
    std::uint64_t seed = 0;
    std::vector<PolyK> probes;  // tested along with the samples
};

struct PsiResult {
    ValDesc desc;
    ValType type;
    std::optional<ExtScalar> gamma;
    std::string certificate;
};

/// The valuation attached to a sequence: v_{a,gamma} at the last radius of a
/// finite sequence, mu_{F,gamma} for a witnessed algebraic type, or the
/// limit of the family when every tested polynomial stabilizes.
PsiResult psi(const PCSeq& seq, const AnalysisOptions& opts = {});

// Built-in sequences. The algebraic ones carry their witness.

/// a_i = sum_{j<=i} t^(p^j), root of x^p - x + t.
PCSeq artin_schreier_nt(const FieldSpec& field);
/// a_i = t^q * sum_{j<=i} t^(-1/p^j), root of x^p - t^(q(p-1)) x - t^(p(q-1)).
PCSeq artin_schreier_vt(const FieldSpec& field, const Rat& shift = Rat(0));
/// Partial sums of sum_j b_j t^j at the nonzero digits, with digits
/// pre-period followed by a repeating period; the limit lies in K.
PCSeq periodic_series(const FieldSpec& field, std::vector<Coeff> pre_period, std::vector<Coeff> period);
/// Same with seeded pseudorandom digits and no witness.
PCSeq random_series(const FieldSpec& field, std::uint64_t seed);
/// The finite sequence [t, t + t^2].
PCSeq rt_example(const FieldSpec& field);

}  // namespace valparam
