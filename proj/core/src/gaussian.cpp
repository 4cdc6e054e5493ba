#include "sqc/gaussian.hpp"

#include <complex>
#include <sstream>
#include <stdexcept>

namespace sqc {

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
    const Eigen::Index dim = mean_.size();
    if (dim < 2 || dim % 2 != 0) {
        throw std::invalid_argument("state dimension must be 2N with N >= 1");
    }
    if (cov_.rows() != dim || cov_.cols() != dim) {
        throw std::invalid_argument("covariance dimension does not match mean");
    }
    if (!mean_.allFinite() || !cov_.allFinite()) {
        throw std::invalid_argument("state entries must be finite");
    }
    const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, cov_.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("covariance matrix must be symmetric");
    }
    cov_ = ((cov_ + cov_.transpose()) / 2.0).eval();
    Eigen::LLT<Eigen::MatrixXd> llt(cov_);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("covariance matrix must be positive definite");
    }
}

GaussianState GaussianState::vacuum(int n) {
    if (n < 1) throw std::invalid_argument("vacuum requires n >= 1");
    return GaussianState(Eigen::VectorXd::Zero(2 * n),
                         Eigen::MatrixXd::Identity(2 * n, 2 * n) / 2.0);
}

double GaussianState::purity_determinant() const {
    return (2.0 * cov_).determinant();
}

double GaussianState::uncertainty_margin() const {
    const int n = modes();
    Eigen::MatrixXcd m = cov_.cast<std::complex<double>>();
    m += std::complex<double>(0.0, 0.5) * symplectic_form(n).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    return solver.eigenvalues().minCoeff();
}

GaussianState evolve(const GaussianState& state, const CouplingMatrix& g, double t,
                     double exponent_cap) {
    if (state.modes() != g.size()) {
        throw std::invalid_argument("evolve: state and coupling matrix mode counts differ");
    }
    const Eigen::MatrixXd s = propagator(g, t, exponent_cap);
    Eigen::VectorXd mean = s * state.mean();
    Eigen::MatrixXd cov = s * state.cov() * s.transpose();
    cov = ((cov + cov.transpose()) / 2.0).eval();
    return GaussianState(std::move(mean), std::move(cov));
}

double joint_variance(const GaussianState& state, const JointQuadrature& q) {
    const int n = state.modes();
    if (q.x.size() != n || q.p.size() != n) {
        throw std::invalid_argument("joint_variance: coefficient length does not match mode count");
    }
    if (!q.x.allFinite() || !q.p.allFinite()) {
        throw std::invalid_argument("joint_variance: coefficients must be finite");
    }
    if (q.x.isZero(0.0) && q.p.isZero(0.0)) {
        throw std::invalid_argument("joint_variance: all coefficients are zero");
    }
    Eigen::VectorXd c(2 * n);
    c.head(n) = q.x;
    c.tail(n) = q.p;
    return c.dot(state.cov() * c);
}

WitnessResult witness_pair(const GaussianState& state, int i, int j,
                           const Eigen::VectorXd& gains, double threshold) {
    const int n = state.modes();
    if (i < 0 || j < 0 || i >= n || j >= n) {
        throw std::invalid_argument("witness_pair: mode index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("witness_pair: the two modes must differ");
    }
    if (gains.size() != n - 2) {
        std::ostringstream msg;
        msg << "witness_pair: expected " << n - 2 << " gain entries, got "
            << gains.size();
        throw std::invalid_argument(msg.str());
    }

    JointQuadrature xdiff;
    xdiff.x = Eigen::VectorXd::Zero(n);
    xdiff.p = Eigen::VectorXd::Zero(n);
    xdiff.x(i) = 1.0;
    xdiff.x(j) = -1.0;

    JointQuadrature psum;
    psum.x = Eigen::VectorXd::Zero(n);
    psum.p = Eigen::VectorXd::Zero(n);
    psum.p(i) = 1.0;
    psum.p(j) = 1.0;
    int g_idx = 0;
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        psum.p(k) = gains(g_idx++);
    }

    WitnessResult result;
    result.value = joint_variance(state, xdiff) + joint_variance(state, psum);
    result.threshold = threshold;
    result.violated = result.value < threshold;
    return result;
}

}  // namespace sqc
