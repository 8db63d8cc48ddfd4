// Serial reference kernels versus their OpenMP versions, on the shapes the
// experiment runner actually uses (collocation up to 320 x 640, evaluation on
// the 4000-point error grid).

#include <benchmark/benchmark.h>

#include <vector>

#include "elm/barycentric.hpp"
#include "elm/kernels.hpp"
#include "elm/metrics.hpp"
#include "elm/network.hpp"

namespace {

elm::HiddenLayer layer(std::size_t n, elm::ActivationKind kind) {
    return elm::init_hidden(n, kind, elm::natural_scheme(kind), 7);
}

template <bool Parallel>
void BM_Collocation(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto hidden = layer(2 * m, elm::ActivationKind::LogisticSigmoid);
    const auto nodes = elm::generate_nodes(elm::NodeKind::ChebyshevSecondKind, m);
    std::vector<double> out(m * hidden.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            elm::kernels::collocation_omp(hidden.neurons(), nodes.abscissas(), out);
        } else {
            elm::kernels::collocation_serial(hidden.neurons(), nodes.abscissas(), out);
        }
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(out.size()));
}

template <bool Parallel>
void BM_NetworkOnGrid(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto hidden = layer(n, elm::ActivationKind::GaussianRadialBasis);
    const std::vector<double> w(n, 1.0 / static_cast<double>(n));
    const auto& grid = elm::evaluation_grid();
    std::vector<double> out(grid.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            elm::kernels::network_omp(hidden.neurons(), w, grid, out);
        } else {
            elm::kernels::network_serial(hidden.neurons(), w, grid, out);
        }
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size() * n));
}

template <bool Parallel>
void BM_BarycentricOnGrid(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto nodes = elm::generate_nodes(elm::NodeKind::ChebyshevSecondKind, m);
    std::vector<double> y(nodes.abscissas().begin(), nodes.abscissas().end());
    const auto weights = elm::barycentric_weights(nodes);
    const auto& grid = elm::evaluation_grid();
    std::vector<double> out(grid.size());
    for (auto _ : state) {
        if constexpr (Parallel) {
            elm::kernels::barycentric_omp(nodes.abscissas(), y, weights, grid, out);
        } else {
            elm::kernels::barycentric_serial(nodes.abscissas(), y, weights, grid, out);
        }
        benchmark::DoNotOptimize(out.data());
        benchmark::ClobberMemory();
    }
}

}  // namespace

BENCHMARK(BM_Collocation<false>)->Name("collocation/serial")->Arg(40)->Arg(160)->Arg(320);
BENCHMARK(BM_Collocation<true>)->Name("collocation/omp")->Arg(40)->Arg(160)->Arg(320);
BENCHMARK(BM_NetworkOnGrid<false>)->Name("network_grid/serial")->Arg(80)->Arg(320)->Arg(640);
BENCHMARK(BM_NetworkOnGrid<true>)->Name("network_grid/omp")->Arg(80)->Arg(320)->Arg(640);
BENCHMARK(BM_BarycentricOnGrid<false>)->Name("barycentric_grid/serial")->Arg(40)->Arg(320);
BENCHMARK(BM_BarycentricOnGrid<true>)->Name("barycentric_grid/omp")->Arg(40)->Arg(320);

BENCHMARK_MAIN();
