#pragma once

#include <Eigen/Dense>

#include "sqc/coupling.hpp"

namespace sqc {

// Coefficients of a joint quadrature operator sum_j x_j X_j + sum_j p_j P_j.
// Both vectors must have the mode count of the state they are applied to;
// at least one coefficient must be nonzero.
struct JointQuadrature {
    Eigen::VectorXd x;
    Eigen::VectorXd p;
};

// Gaussian state in XXPP ordering: mean vector of length 2N and a symmetric
// positive-definite 2N x 2N covariance matrix. Vacuum has cov = I/2.
class GaussianState {
public:
    GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    static GaussianState vacuum(int n);

    int modes() const { return static_cast<int>(mean_.size()) / 2; }
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::MatrixXd& cov() const { return cov_; }

    // det(2 cov); equals 1 exactly for pure states.
    double purity_determinant() const;

    // Minimum eigenvalue of cov + (i/2) Omega; >= -tol certifies a
    // physical state.
    double uncertainty_margin() const;

private:
    Eigen::VectorXd mean_;
    Eigen::MatrixXd cov_;
};

// Evolves a state under the coupling matrix for time t using the
// phase-space propagator: mean -> S mean, cov -> S cov S^T.
GaussianState evolve(const GaussianState& state, const CouplingMatrix& g, double t,
                     double exponent_cap = 50.0);

// Variance of the joint quadrature in the given state: c^T cov c with
// c = [x; p]. Mean offsets do not contribute.
double joint_variance(const GaussianState& state, const JointQuadrature& q);

struct WitnessResult {
    double value = 0.0;       // Var(X_i - X_j) + Var(P_i + P_j + sum_k g_k P_k)
    double threshold = 1.0;
    bool violated = false;    // value < threshold
};

// Two-mode entanglement witness with gain-weighted participation of the
// remaining modes. `gains` holds one entry per mode outside {i, j}, ordered
// by ascending mode index. A value below the threshold witnesses
// inseparability of the pair in this convention.
WitnessResult witness_pair(const GaussianState& state, int i, int j,
                           const Eigen::VectorXd& gains, double threshold = 1.0);

}  // namespace sqc
