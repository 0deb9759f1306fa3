#include "valparam/kernels.hpp"

#include <omp.h>

#include <exception>

namespace valparam::kernels {

namespace {

bool violates(const ValDesc& d, const PolyPair& pair) {
    const auto& [f, g] = pair;
    ExtScalar vf = val_apply(d, f), vg = val_apply(d, g);
    if (!(val_apply(d, f * g) == vf + vg)) return true;
    return ext_cmp(val_apply(d, f + g), ext_min(vf, vg)) < 0;
}

// Runs body(i) for i in [0, n) in parallel. Failures are collected per index
// and the one with the lowest index is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body body) {
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

std::vector<ValueQ> values_along(const PolyK& f, std::span<const KElem> points) {
    std::vector<ValueQ> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) { out[i] = k_val(poly_eval(f, points[i])); });
    return out;
}

std::vector<std::vector<ValueQ>> difference_valuations(std::span<const KElem> elems) {
    const std::size_t n = elems.size();
    std::vector<std::vector<ValueQ>> d(n, std::vector<ValueQ>(n));
    // Flatten the upper triangle so the work is balanced across threads.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    cells.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    }
    parallel_for(cells.size(), [&](std::size_t c) {
        auto [i, j] = cells[c];
        d[i][j] = k_val(elems[i] - elems[j]);
    });
    return d;
}

std::vector<ExtScalar> apply_many(const ValDesc& d, std::span<const PolyK> fs) {
    std::vector<ExtScalar> out(fs.size());
    parallel_for(fs.size(), [&](std::size_t i) { out[i] = val_apply(d, fs[i]); });
    return out;
}

std::optional<std::size_t> first_axiom_violation(const ValDesc& d, std::span<const PolyPair> pairs) {
    std::vector<char> bad(pairs.size(), 0);
    parallel_for(pairs.size(), [&](std::size_t i) { bad[i] = violates(d, pairs[i]) ? 1 : 0; });
    for (std::size_t i = 0; i < bad.size(); ++i) {
        if (bad[i]) return i;
    }
    return std::nullopt;
}

int thread_count() { return omp_get_max_threads(); }

namespace serial {

std::vector<ValueQ> values_along(const PolyK& f, std::span<const KElem> points) {
    std::vector<ValueQ> out;
    out.reserve(points.size());
    for (const auto& a : points) out.push_back(k_val(poly_eval(f, a)));
    return out;
}

std::vector<std::vector<ValueQ>> difference_valuations(std::span<const KElem> elems) {
    const std::size_t n = elems.size();
    std::vector<std::vector<ValueQ>> d(n, std::vector<ValueQ>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) d[i][j] = k_val(elems[i] - elems[j]);
    }
    return d;
}

std::vector<ExtScalar> apply_many(const ValDesc& d, std::span<const PolyK> fs) {
    std::vector<ExtScalar> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(val_apply(d, f));
    return out;
}

std::optional<std::size_t> first_axiom_violation(const ValDesc& d, std::span<const PolyPair> pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (violates(d, pairs[i])) return i;
    }
    return std::nullopt;
}

}  // namespace serial

}  // namespace valparam::kernels
