#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include <sqc/coupling.hpp>
#include <sqc/fock.hpp>
#include <sqc/gaussian.hpp>

using namespace sqc;

namespace {

JointQuadrature x_of(int n, int mode) {
    JointQuadrature q{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
    q.x(mode) = 1.0;
    return q;
}

JointQuadrature p_of(int n, int mode) {
    JointQuadrature q{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
    q.p(mode) = 1.0;
    return q;
}

JointQuadrature x_diff(int n, int i, int j) {
    JointQuadrature q{Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
    q.x(i) = 1.0;
    q.x(j) = -1.0;
    return q;
}

CouplingMatrix one_mode_squeezer(double g) {
    Eigen::MatrixXd m(1, 1);
    m(0, 0) = g;
    return CouplingMatrix(m);
}

}  // namespace

TEST_CASE("the untouched vacuum keeps variance one half and zero photons") {
    const CouplingMatrix g = complete_graph_coupling(2, 0.8);
    FockConfig config;
    config.mode_count = 2;
    config.cutoff = 10;
    const FockOracle oracle(g, config);
    const Eigen::VectorXd state = oracle.evolve_vacuum(0.0);
    CHECK(oracle.variance(state, x_of(2, 0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(oracle.variance(state, p_of(2, 1)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(oracle.mean_photon_number(state, 0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("a single squeezer matches the closed-form quadrature laws") {
    const double kappa = 1.0;
    const CouplingMatrix g = one_mode_squeezer(kappa);
    FockConfig config;
    config.mode_count = 1;
    config.cutoff = 40;
    const FockOracle oracle(g, config);
    for (const double t : {0.1, 0.3, 0.5}) {
        const Eigen::VectorXd state = oracle.evolve_vacuum(t);
        CHECK(oracle.variance(state, p_of(1, 0)) ==
              doctest::Approx(0.5 * std::exp(-2.0 * kappa * t)).epsilon(1e-8));
        CHECK(oracle.variance(state, x_of(1, 0)) ==
              doctest::Approx(0.5 * std::exp(2.0 * kappa * t)).epsilon(1e-8));
        CHECK(oracle.mean_photon_number(state, 0) ==
              doctest::Approx(std::sinh(kappa * t) * std::sinh(kappa * t))
                  .epsilon(1e-8));
    }
    const Eigen::VectorXd state = oracle.evolve_vacuum(0.3);
    CHECK(oracle.mean_photon_number(state, 0) ==
          doctest::Approx(0.0927326091211).epsilon(1e-8));
}

TEST_CASE("a two-mode squeezer contracts the difference quadrature") {
    const double kappa = 0.9;
    const CouplingMatrix g = complete_graph_coupling(2, kappa);
    FockConfig config;
    config.mode_count = 2;
    config.cutoff = 24;
    const FockOracle oracle(g, config);
    for (const double t : {0.2, 0.5}) {
        const Eigen::VectorXd state = oracle.evolve_vacuum(t);
        JointQuadrature diff = x_diff(2, 0, 1);
        diff.x /= std::sqrt(2.0);
        CHECK(oracle.variance(state, diff) ==
              doctest::Approx(0.5 * std::exp(-2.0 * kappa * t)).epsilon(1e-7));
    }
}

TEST_CASE("the complete three-mode graph is permutation symmetric in the oracle") {
    const CouplingMatrix g = complete_graph_coupling(3, 1.0);
    FockConfig config;
    config.mode_count = 3;
    config.cutoff = 9;
    const FockOracle oracle(g, config);
    // Top rate is 2 kappa, so t = 0.25 saturates the |lambda t| <= 0.5 window.
    const Eigen::VectorXd state = oracle.evolve_vacuum(0.25);
    const double v01 = oracle.variance(state, x_diff(3, 0, 1));
    const double v02 = oracle.variance(state, x_diff(3, 0, 2));
    const double v12 = oracle.variance(state, x_diff(3, 1, 2));
    CHECK(v01 == doctest::Approx(v02).epsilon(1e-12));
    CHECK(v01 == doctest::Approx(v12).epsilon(1e-12));
    const double n0 = oracle.mean_photon_number(state, 0);
    const double n1 = oracle.mean_photon_number(state, 1);
    CHECK(n0 == doctest::Approx(n1).epsilon(1e-12));
}

TEST_CASE("oracle and covariance evolution agree on a three-mode graph") {
    const double kappa = 1.0;
    const CouplingMatrix g = complete_graph_coupling(3, kappa);
    FockConfig config;
    config.mode_count = 3;
    config.cutoff = 12;
    const FockOracle oracle(g, config);
    const double t = 0.2;
    const Eigen::VectorXd state = oracle.evolve_vacuum(t);
    const GaussianState evolved = evolve(GaussianState::vacuum(3), g, t);
    const JointQuadrature diff = x_diff(3, 0, 1);
    CHECK(oracle.variance(state, diff) ==
          doctest::Approx(joint_variance(evolved, diff)).epsilon(1e-6));
    JointQuadrature sum_p{Eigen::VectorXd::Zero(3), Eigen::VectorXd::Ones(3)};
    CHECK(oracle.variance(state, sum_p) ==
          doctest::Approx(joint_variance(evolved, sum_p)).epsilon(1e-6));
}

TEST_CASE("the wrapped variance reports convergence under cutoff growth") {
    const CouplingMatrix g = complete_graph_coupling(2, 1.0);
    FockConfig config;
    config.mode_count = 2;
    config.cutoff = 16;
    JointQuadrature diff = x_diff(2, 0, 1);
    diff.x /= std::sqrt(2.0);
    const OracleVariance result = exact_variance(g, diff, 0.4, config);
    CHECK(result.converged);
    CHECK(result.variance == doctest::Approx(0.5 * std::exp(-0.8)).epsilon(1e-6));

    FockConfig tiny = config;
    tiny.cutoff = 2;  // smallest legal truncation, visibly unconverged here
    const OracleVariance truncated = exact_variance(g, diff, 0.4, tiny);
    CHECK_FALSE(truncated.converged);
}

TEST_CASE("the photon-number wrapper matches the squeezer count") {
    const CouplingMatrix g = one_mode_squeezer(1.0);
    FockConfig config;
    config.mode_count = 1;
    config.cutoff = 40;
    CHECK(exact_photon_number(g, 0, 0.3, config) ==
          doctest::Approx(0.0927326091211).epsilon(1e-8));
}

TEST_CASE("dimension and time caps are enforced") {
    FockConfig config;
    config.mode_count = 3;
    config.cutoff = 50;  // 51^3 = 132651 > 1e5
    CHECK_THROWS_AS(FockOracle(complete_graph_coupling(3, 1.0), config),
                    std::range_error);

    config.cutoff = 8;
    const FockOracle oracle(complete_graph_coupling(3, 1.0), config);
    // Spectral radius 2, so t = 0.26 exceeds the evolution window.
    CHECK_THROWS_AS(oracle.evolve_vacuum(0.26), std::invalid_argument);

    FockConfig four = config;
    four.mode_count = 4;
    CHECK_THROWS_AS(FockOracle(complete_graph_coupling(4, 1.0), four),
                    std::invalid_argument);
}

TEST_CASE("the series path and the stepped integrator agree across the size split") {
    const double kappa = 1.0;
    const CouplingMatrix g = complete_graph_coupling(2, kappa);
    const double t = 0.25;
    JointQuadrature diff = x_diff(2, 0, 1);
    diff.x /= std::sqrt(2.0);

    FockConfig series;
    series.mode_count = 2;
    series.cutoff = 63;  // dimension 4096, the largest series-path size
    FockConfig stepped;
    stepped.mode_count = 2;
    stepped.cutoff = 64;  // dimension 4225 forces the integrator

    const double a = exact_variance(g, diff, t, series).variance;
    const double b = exact_variance(g, diff, t, stepped).variance;
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
    CHECK(a == doctest::Approx(0.5 * std::exp(-2.0 * kappa * t)).epsilon(1e-7));
}
