#include <benchmark/benchmark.h>

#include "valparam/kernels.hpp"
#include "valparam/pcs.hpp"

using namespace valparam;

namespace {

std::vector<PolyK> polys(const FieldSpec& f, std::size_t n) {
    std::vector<PolyK> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_poly(f, i, 1 + static_cast<unsigned>(i % 4), 2));
    return out;
}

template <auto Fn>
void values_along(benchmark::State& state) {
    auto h = FieldSpec::perfect_hull(2);
    auto pts = artin_schreier_vt(h).elements(static_cast<std::size_t>(state.range(0)));
    auto f = parse_poly(h, "x^3 + t*x^2 + t^(-1)*x + 1");
    for (auto _ : state) benchmark::DoNotOptimize(Fn(f, pts));
}

template <auto Fn>
void difference_valuations(benchmark::State& state) {
    auto f = FieldSpec::rat_fun(5);
    std::vector<KElem> elems;
    for (std::int64_t i = 0; i < state.range(0); ++i) elems.push_back(sample(f, static_cast<std::uint64_t>(i), 3));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(elems));
}

template <auto Fn>
void apply_many(benchmark::State& state) {
    auto h = FieldSpec::perfect_hull(2);
    auto d = psi(artin_schreier_vt(h)).desc;
    auto fs = polys(h, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(d, fs));
}

template <auto Fn>
void axiom_scan(benchmark::State& state) {
    auto f = FieldSpec::rat_fun(3);
    auto d = ValDesc::monomial(parse_elem(f, "t + 1"), ExtScalar::fin(Rat(1)));
    std::vector<PolyPair> pairs;
    auto ps = polys(f, 2 * static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i + 1 < ps.size(); i += 2) pairs.emplace_back(ps[i], ps[i + 1]);
    for (auto _ : state) benchmark::DoNotOptimize(Fn(d, pairs));
}

}  // namespace

BENCHMARK(values_along<kernels::serial::values_along>)->Name("values_along/serial")->Arg(8)->Arg(12);
BENCHMARK(values_along<kernels::values_along>)->Name("values_along/omp")->Arg(8)->Arg(12);
BENCHMARK(difference_valuations<kernels::serial::difference_valuations>)->Name("difference_valuations/serial")->Arg(32);
BENCHMARK(difference_valuations<kernels::difference_valuations>)->Name("difference_valuations/omp")->Arg(32);
BENCHMARK(apply_many<kernels::serial::apply_many>)->Name("apply_many/serial")->Arg(64);
BENCHMARK(apply_many<kernels::apply_many>)->Name("apply_many/omp")->Arg(64);
BENCHMARK(axiom_scan<kernels::serial::first_axiom_violation>)->Name("axioms/serial")->Arg(256);
BENCHMARK(axiom_scan<kernels::first_axiom_violation>)->Name("axioms/omp")->Arg(256);

BENCHMARK_MAIN();
