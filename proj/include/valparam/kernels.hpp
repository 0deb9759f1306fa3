#pragma once

// Bulk evaluation loops. Each kernel has an OpenMP version and a serial
// reference with identical results; an exception thrown inside the loop is
// rethrown for the lowest failing index, so error behavior does not depend on
// scheduling either.

#include <optional>
#include <span>
#include <vector>

#include "valparam/valuation.hpp"

namespace valparam::kernels {

/// v(f(a)) for each point a.
std::vector<ValueQ> values_along(const PolyK& f, std::span<const KElem> points);

/// d[i][j] = v(a_i - a_j) for i < j; entries with i >= j are left infinite.
std::vector<std::vector<ValueQ>> difference_valuations(std::span<const KElem> elems);

std::vector<ExtScalar> apply_many(const ValDesc& d, std::span<const PolyK> fs);

/// Lowest index of a pair violating V1 or V2, if any.
std::optional<std::size_t> first_axiom_violation(const ValDesc& d, std::span<const PolyPair> pairs);

namespace serial {

std::vector<ValueQ> values_along(const PolyK& f, std::span<const KElem> points);
std::vector<std::vector<ValueQ>> difference_valuations(std::span<const KElem> elems);
std::vector<ExtScalar> apply_many(const ValDesc& d, std::span<const PolyK> fs);
std::optional<std::size_t> first_axiom_violation(const ValDesc& d, std::span<const PolyPair> pairs);

}  // namespace serial

/// Threads OpenMP will use for the parallel kernels.
int thread_count();

}  // namespace valparam::kernels
