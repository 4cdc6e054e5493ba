#pragma once

#include <array>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "sqc/coupling.hpp"
#include "sqc/gaussian.hpp"

namespace sqc {

struct FockConfig {
    int mode_count = 1;
    int cutoff = 12;         // photon-number cap per mode
    double time_step = 0.0;  // integrator step for large dimensions; 0 = automatic
};

struct OracleVariance {
    double variance = 0.0;
    bool converged = false;
};

// Exact number-basis simulator of the same quadratic Hamiltonians, used as an
// independent cross-check of the covariance evolution. Supports up to three
// modes; the truncated dimension (cutoff+1)^modes is capped at 1e5.
//
// The generator of motion -iH is a real antisymmetric matrix in the number
// basis, so the evolved vacuum keeps real amplitudes and the evolution is an
// orthogonal flow; norm preservation is asserted after every evolution.
class FockOracle {
  public:
    FockOracle(const CouplingMatrix& g, const FockConfig& config);

    int dimension() const { return dimension_; }
    const FockConfig& config() const { return config_; }

    // Vacuum evolved for time t. Requires |lambda_max * t| <= 0.5, the
    // regime where the default cutoff keeps truncation error negligible.
    Eigen::VectorXd evolve_vacuum(double t) const;

    // Var(Q) of the given joint quadrature in this (real) state.
    double variance(const Eigen::VectorXd& state, const JointQuadrature& q) const;

    // <n_mode> in this state.
    double mean_photon_number(const Eigen::VectorXd& state, int mode) const;

  private:
    int occupation(int index, int mode) const;

    FockConfig config_;
    int dimension_ = 0;
    std::array<int, 3> strides_{{0, 0, 0}};
    Eigen::SparseMatrix<double> generator_;  // -iH, real antisymmetric
    double generator_one_norm_ = 0.0;
    double max_rate_ = 0.0;  // spectral radius of the coupling matrix
};

// Variance of the evolved vacuum at the configured cutoff, with a
// convergence flag: true iff raising the cutoff by 4 moves the result by
// less than 1e-4. Both truncations must fit under the dimension cap.
OracleVariance exact_variance(const CouplingMatrix& g, const JointQuadrature& q,
                              double t, const FockConfig& config);

// <n_mode> of the evolved vacuum at the configured cutoff.
double exact_photon_number(const CouplingMatrix& g, int mode, double t,
                           const FockConfig& config);

}  // namespace sqc
