#include <benchmark/benchmark.h>

#include "graphon/densities.hpp"
#include "graphon/named.hpp"
#include "graphon/optimize.hpp"
#include "graphon/rng.hpp"
#include "graphon/spectral.hpp"

namespace {

graphon::MultipodalGraphon random_graphon(int m, std::uint64_t seed) {
    graphon::Rng rng(seed);
    Eigen::MatrixXd p(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) p(i, j) = p(j, i) = rng.uniform(0.05, 0.95);
    Eigen::VectorXd c = Eigen::VectorXd::Constant(m, 1.0 / m);
    return graphon::MultipodalGraphon{std::move(c), std::move(p)};
}

void BM_TriangleDensity(benchmark::State& state) {
    auto g = random_graphon(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(graphon::triangle_density(g));
}
BENCHMARK(BM_TriangleDensity)->Arg(2)->Arg(4)->Arg(6);

void BM_Entropy(benchmark::State& state) {
    auto g = random_graphon(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(graphon::entropy(g));
}
BENCHMARK(BM_Entropy)->Arg(2)->Arg(6);

void BM_Spectrum(benchmark::State& state) {
    auto g = random_graphon(static_cast<int>(state.range(0)), 13);
    double e = graphon::edge_density(g);
    for (auto _ : state) benchmark::DoNotOptimize(graphon::spectrum(g, e));
}
BENCHMARK(BM_Spectrum)->Arg(2)->Arg(6);

void BM_ElCertificate(benchmark::State& state) {
    auto g = graphon::symmetric_bipodal(0.5, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(graphon::el_certificate(g));
}
BENCHMARK(BM_ElCertificate);

void BM_MaximizeEntropy(benchmark::State& state) {
    graphon::ConstraintProblem problem;
    problem.target_e = 0.5;
    problem.target_t = 0.117;
    problem.pods = static_cast<int>(state.range(0));
    problem.restarts = 2;
    problem.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(graphon::maximize_entropy(problem));
}
BENCHMARK(BM_MaximizeEntropy)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
