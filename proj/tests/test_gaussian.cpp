#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include <sqc/coupling.hpp>
#include <sqc/gaussian.hpp>

using namespace sqc;

namespace {

JointQuadrature p_sum(int n) {
    return {Eigen::VectorXd::Zero(n), Eigen::VectorXd::Ones(n)};
}

JointQuadrature x_diff(int n, int i, int j) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    x(i) = 1.0;
    x(j) = -1.0;
    return {x, Eigen::VectorXd::Zero(n)};
}

}  // namespace

TEST_CASE("vacuum is pure with half-unit variances") {
    const GaussianState vac = GaussianState::vacuum(3);
    CHECK(vac.mean().norm() == 0.0);
    CHECK((vac.cov() - 0.5 * Eigen::MatrixXd::Identity(6, 6)).norm() == 0.0);
    CHECK(vac.purity_determinant() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(vac.uncertainty_margin() > -1e-12);

    JointQuadrature q{Eigen::VectorXd::Ones(3) / std::sqrt(3.0),
                      Eigen::VectorXd::Zero(3)};
    CHECK(joint_variance(vac, q) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("evolution preserves purity and the uncertainty bound") {
    const CouplingMatrix g = complete_graph_coupling(4, 1.1);
    const GaussianState state = evolve(GaussianState::vacuum(4), g, 0.6);
    CHECK(state.purity_determinant() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(state.uncertainty_margin() > -1e-10);
}

TEST_CASE("evolving for zero time is the identity") {
    // The propagator is assembled spectrally, so t = 0 reproduces the
    // identity only to eigensolver rounding.
    const GaussianState vac = GaussianState::vacuum(2);
    const GaussianState same = evolve(vac, complete_graph_coupling(2, 1.0), 0.0);
    CHECK((same.cov() - vac.cov()).norm() <= 1e-14);
}

TEST_CASE("collective momentum squeezes at the collective rate") {
    const double kappa = 0.7;
    for (int n = 2; n <= 5; ++n) {
        const CouplingMatrix g = complete_graph_coupling(n, kappa);
        for (const double kappa_t : {0.1, 0.5, 1.0}) {
            const GaussianState state =
                evolve(GaussianState::vacuum(n), g, kappa_t / kappa);
            const double expected =
                0.5 * n * std::exp(-2.0 * (n - 1) * kappa_t);
            CHECK(joint_variance(state, p_sum(n)) ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("every pair difference squeezes at the uniform rate") {
    const double kappa = 0.7;
    for (int n = 2; n <= 5; ++n) {
        const CouplingMatrix g = complete_graph_coupling(n, kappa);
        for (const double kappa_t : {0.1, 0.5, 1.0}) {
            const GaussianState state =
                evolve(GaussianState::vacuum(n), g, kappa_t / kappa);
            const double expected = std::exp(-2.0 * kappa_t);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    CHECK(joint_variance(state, x_diff(n, i, j)) ==
                          doctest::Approx(expected).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("single-mode squeezer follows the closed form") {
    Eigen::MatrixXd g11(1, 1);
    g11 << 1.0;
    const CouplingMatrix g{g11};
    for (const double t : {0.1, 0.3}) {
        const GaussianState state = evolve(GaussianState::vacuum(1), g, t);
        JointQuadrature qx{Eigen::VectorXd::Ones(1), Eigen::VectorXd::Zero(1)};
        JointQuadrature qp{Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1)};
        CHECK(joint_variance(state, qx) ==
              doctest::Approx(0.5 * std::exp(2.0 * t)).epsilon(1e-12));
        CHECK(joint_variance(state, qp) ==
              doctest::Approx(0.5 * std::exp(-2.0 * t)).epsilon(1e-12));
        const double photons =
            (joint_variance(state, qx) + joint_variance(state, qp) - 1.0) / 2.0;
        CHECK(photons == doctest::Approx(std::sinh(t) * std::sinh(t)).epsilon(1e-12));
    }
}

TEST_CASE("pair witness combines the difference and gained total momentum") {
    const CouplingMatrix g = complete_graph_coupling(3, 1.0);
    for (const double t : {0.0, 0.2, 0.5}) {
        const GaussianState state = evolve(GaussianState::vacuum(3), g, t);
        const WitnessResult w =
            witness_pair(state, 0, 2, Eigen::VectorXd::Ones(1));
        const double expected =
            std::exp(-2.0 * t) + 1.5 * std::exp(-4.0 * t);
        CHECK(w.value == doctest::Approx(expected).epsilon(1e-12));
        CHECK(w.threshold == 1.0);
        CHECK(w.violated == (w.value < 1.0));
    }
}

TEST_CASE("witness crossing sits at the analytic root of the variance sum") {
    // Solve exp(-2u) + 1.5 exp(-4u) = 1: with s = exp(-2u) the positive root
    // of 1.5 s^2 + s - 1 is s = (sqrt(7) - 1)/3, so u = -log(s)/2.
    const double su = (std::sqrt(7.0) - 1.0) / 3.0;
    const double crossing = -0.5 * std::log(su);
    CHECK(crossing == doctest::Approx(0.30020764233301744).epsilon(1e-15));

    const CouplingMatrix g = complete_graph_coupling(3, 1.0);
    auto value_at = [&](double t) {
        const GaussianState state = evolve(GaussianState::vacuum(3), g, t);
        return witness_pair(state, 0, 2, Eigen::VectorXd::Ones(1)).value;
    };
    CHECK(value_at(crossing) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(value_at(crossing - 1e-3) > 1.0);
    CHECK(value_at(crossing + 1e-3) < 1.0);
}

TEST_CASE("joint quadratures and witness inputs are validated") {
    const GaussianState vac = GaussianState::vacuum(3);
    JointQuadrature wrong{Eigen::VectorXd::Ones(2), Eigen::VectorXd::Zero(2)};
    CHECK_THROWS_AS(joint_variance(vac, wrong), std::invalid_argument);
    JointQuadrature zero{Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(3)};
    CHECK_THROWS_AS(joint_variance(vac, zero), std::invalid_argument);

    CHECK_THROWS_AS(witness_pair(vac, 0, 0, Eigen::VectorXd::Ones(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(witness_pair(vac, 0, 3, Eigen::VectorXd::Ones(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(witness_pair(vac, 0, 2, Eigen::VectorXd::Ones(2)),
                    std::invalid_argument);
}

TEST_CASE("gaussian state construction is validated") {
    CHECK_THROWS_AS(GaussianState(Eigen::VectorXd::Zero(3),
                                  Eigen::MatrixXd::Identity(3, 3)),
                    std::invalid_argument);
    Eigen::MatrixXd lopsided = Eigen::MatrixXd::Identity(4, 4);
    lopsided(0, 1) = 0.2;
    CHECK_THROWS_AS(GaussianState(Eigen::VectorXd::Zero(4), lopsided),
                    std::invalid_argument);
}
