#include <benchmark/benchmark.h>

#include <cstdlib>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include <sqc/catalog.hpp>
#include <sqc/coupling.hpp>
#include <sqc/fock.hpp>
#include <sqc/gaussian.hpp>
#include <sqc/qpm.hpp>
#include <sqc/sellmeier.hpp>

using namespace sqc;

namespace {

// QPM benchmarks need a dispersion dataset; point SQC_DATASET at one.
std::optional<SellmeierSet> load_env_dataset() {
    const char* path = std::getenv("SQC_DATASET");
    if (path == nullptr) return std::nullopt;
    return SellmeierSet::load_file(path);
}

void bm_eigenmodes_k8(benchmark::State& state) {
    const CouplingMatrix g = complete_graph_coupling(8, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenmodes(g));
    }
}
BENCHMARK(bm_eigenmodes_k8);

void bm_propagator_k8(benchmark::State& state) {
    const CouplingMatrix g = complete_graph_coupling(8, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagator(g, 0.4));
    }
}
BENCHMARK(bm_propagator_k8);

void bm_evolve_and_variance_k8(benchmark::State& state) {
    const CouplingMatrix g = complete_graph_coupling(8, 1.0);
    const GaussianState vac = GaussianState::vacuum(8);
    JointQuadrature sum_p{Eigen::VectorXd::Zero(8), Eigen::VectorXd::Ones(8)};
    for (auto _ : state) {
        const GaussianState evolved = evolve(vac, g, 0.4);
        benchmark::DoNotOptimize(joint_variance(evolved, sum_p));
    }
}
BENCHMARK(bm_evolve_and_variance_k8);

void bm_enumerate_terms(benchmark::State& state) {
    std::vector<ModeLabel> modes;
    for (int k = 0; k < 9; ++k) {
        modes.push_back(ModeLabel{2 * k, k % 2 == 0 ? Pol::Z : Pol::Y});
    }
    std::vector<PumpField> pumps;
    for (int p = 2; p <= 14; p += 4) {
        pumps.push_back(PumpField{p, Pol::Y, 1.0});
        pumps.push_back(PumpField{p + 2, Pol::Z, 1.0});
    }
    const std::vector<ChiElement> chis = {{ChiLabel::yzy, 4.24, true},
                                          {ChiLabel::zzz, 15.8, true},
                                          {ChiLabel::yyy, 2.40, true},
                                          {ChiLabel::yzz, 3.0, true},
                                          {ChiLabel::zyy, 3.0, true}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_terms(modes, pumps, chis));
    }
}
BENCHMARK(bm_enumerate_terms);

void bm_qpm_period(benchmark::State& state) {
    const std::optional<SellmeierSet> set = load_env_dataset();
    if (!set) {
        state.SkipWithError("SQC_DATASET not set");
        return;
    }
    const QpmInteraction q{ChiLabel::zzz, 1.064, 1, 15.8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpm_period(*set, q, 25.0));
    }
}
BENCHMARK(bm_qpm_period);

void bm_shg_curve(benchmark::State& state) {
    const std::optional<SellmeierSet> set = load_env_dataset();
    if (!set) {
        state.SkipWithError("SQC_DATASET not set");
        return;
    }
    const QpmInteraction q{ChiLabel::zzz, 1.064, 1, 15.8};
    const double period = qpm_period(*set, q, 25.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(shg_curve(*set, q, period, 10.0, {0.0, 50.0}, 1001));
    }
}
BENCHMARK(bm_shg_curve);

void bm_fock_two_mode(benchmark::State& state) {
    const CouplingMatrix g = complete_graph_coupling(2, 1.0);
    FockConfig config;
    config.mode_count = 2;
    config.cutoff = 12;
    const FockOracle oracle(g, config);
    JointQuadrature diff{Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2)};
    diff.x << 1.0, -1.0;
    for (auto _ : state) {
        const Eigen::VectorXd evolved = oracle.evolve_vacuum(0.3);
        benchmark::DoNotOptimize(oracle.variance(evolved, diff));
    }
}
BENCHMARK(bm_fock_two_mode);

}  // namespace
