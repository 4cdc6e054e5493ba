#include "sqc/coupling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sqc/gaussian.hpp"

namespace sqc {

namespace {

void require_finite_scalar(double v, const char* name) {
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << name << " must be finite, got " << v;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

CouplingMatrix::CouplingMatrix(Eigen::MatrixXd g) : g_(std::move(g)) {
    if (g_.rows() < 1 || g_.rows() != g_.cols()) {
        throw std::invalid_argument("coupling matrix must be square with size >= 1");
    }
    if (!g_.allFinite()) {
        throw std::invalid_argument("coupling matrix entries must be finite");
    }
    for (Eigen::Index i = 0; i < g_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < g_.cols(); ++j) {
            if (g_(i, j) != g_(j, i)) {
                std::ostringstream msg;
                msg << "coupling matrix must be exactly symmetric; entries (" << i
                    << "," << j << ") and (" << j << "," << i << ") differ";
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

CouplingMatrix CouplingMatrix::zero(int n) {
    if (n < 1) throw std::invalid_argument("coupling matrix size must be >= 1");
    return CouplingMatrix(Eigen::MatrixXd::Zero(n, n));
}

CouplingMatrix complete_graph_coupling(int n, double kappa) {
    if (n < 2) throw std::invalid_argument("complete_graph_coupling requires n >= 2");
    require_finite_scalar(kappa, "kappa");
    Eigen::MatrixXd g = Eigen::MatrixXd::Constant(n, n, kappa);
    g.diagonal().setZero();
    return CouplingMatrix(std::move(g));
}

CouplingMatrix chain_coupling(int n, double kappa) {
    if (n < 2) throw std::invalid_argument("chain_coupling requires n >= 2");
    require_finite_scalar(kappa, "kappa");
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j + 1 < n; ++j) {
        g(j, j + 1) = kappa;
        g(j + 1, j) = kappa;
    }
    return CouplingMatrix(std::move(g));
}

EigenmodeReport::EigenmodeReport(std::vector<Eigenmode> modes, double zero_tolerance)
    : modes_(std::move(modes)), zero_tolerance_(zero_tolerance) {}

Eigen::VectorXd EigenmodeReport::eigenvalues() const {
    Eigen::VectorXd v(count());
    for (int k = 0; k < count(); ++k) v(k) = modes_[k].rate;
    return v;
}

Eigen::MatrixXd EigenmodeReport::eigenvectors() const {
    const int n = count();
    Eigen::MatrixXd v(n, n);
    for (int k = 0; k < n; ++k) v.col(k) = modes_[k].vector;
    return v;
}

JointQuadrature EigenmodeReport::squeezed_quadrature(int k) const {
    const Eigenmode& m = modes_.at(k);
    const int n = count();
    JointQuadrature q;
    q.x = Eigen::VectorXd::Zero(n);
    q.p = Eigen::VectorXd::Zero(n);
    if (m.behavior == ModeBehavior::PSqueezed) {
        q.p = m.vector;
    } else {
        q.x = m.vector;
    }
    return q;
}

double EigenmodeReport::squeezed_variance(int k, double t) const {
    const Eigenmode& m = modes_.at(k);
    return 0.5 * std::exp(-2.0 * std::abs(m.rate) * t);
}

EigenmodeReport eigenmodes(const CouplingMatrix& g, double zero_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenmodes: eigendecomposition failed");
    }
    const int n = g.size();
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const double radius = std::max(std::abs(evals(0)), std::abs(evals(n - 1)));
    const double tol = zero_tol >= 0.0 ? zero_tol : 1e-9 * radius;

    std::vector<Eigenmode> modes(n);
    for (int k = 0; k < n; ++k) {
        const int src = n - 1 - k;  // Eigen sorts ascending
        Eigenmode& m = modes[k];
        m.rate = evals(src);
        m.vector = solver.eigenvectors().col(src);
        if (m.rate > tol) {
            m.behavior = ModeBehavior::PSqueezed;
        } else if (m.rate < -tol) {
            m.behavior = ModeBehavior::XSqueezed;
        } else {
            m.behavior = ModeBehavior::Constant;
        }
    }
    return EigenmodeReport(std::move(modes), tol);
}

Eigen::MatrixXd symplectic_form(int n) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    omega.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    return omega;
}

Eigen::MatrixXd propagator(const CouplingMatrix& g, double t, double exponent_cap) {
    require_finite_scalar(t, "t");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("propagator: eigendecomposition failed");
    }
    const int n = g.size();
    const Eigen::VectorXd& evals = solver.eigenvalues();
    for (int k = 0; k < n; ++k) {
        if (std::abs(evals(k) * t) > exponent_cap) {
            std::ostringstream msg;
            msg << "propagator: |lambda * t| = " << std::abs(evals(k) * t)
                << " exceeds cap " << exponent_cap << " for eigenvalue lambda = "
                << evals(k);
            throw std::range_error(msg.str());
        }
    }
    const Eigen::MatrixXd& v = solver.eigenvectors();
    Eigen::MatrixXd exp_plus =
        v * (evals.array() * t).exp().matrix().asDiagonal() * v.transpose();
    Eigen::MatrixXd exp_minus =
        v * (evals.array() * -t).exp().matrix().asDiagonal() * v.transpose();

    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    s.topLeftCorner(n, n) = exp_plus;
    s.bottomRightCorner(n, n) = exp_minus;
    return s;
}

PassiveNetwork::PassiveNetwork(Eigen::MatrixXd u) : u_(std::move(u)) {
    if (u_.rows() < 1 || u_.rows() != u_.cols()) {
        throw std::invalid_argument("passive network matrix must be square");
    }
    if (!u_.allFinite()) {
        throw std::invalid_argument("passive network matrix entries must be finite");
    }
    const Eigen::MatrixXd gram = u_ * u_.transpose();
    const double defect =
        (gram - Eigen::MatrixXd::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff();
    if (defect > 1e-12) {
        std::ostringstream msg;
        msg << "passive network matrix is not orthogonal (U U^T deviates from "
               "identity by "
            << defect << ")";
        throw std::invalid_argument(msg.str());
    }
}

CouplingMatrix apply_network(const CouplingMatrix& g, const PassiveNetwork& u) {
    if (g.size() != u.size()) {
        throw std::invalid_argument("apply_network: dimension mismatch");
    }
    Eigen::MatrixXd m = u.matrix() * g.matrix() * u.matrix().transpose();
    // Exact Hermitian conjugation can leave asymmetry at roundoff level.
    m = ((m + m.transpose()) / 2.0).eval();
    return CouplingMatrix(std::move(m));
}

PassiveNetwork make_nsplitter(int n) {
    if (n < 2) throw std::invalid_argument("make_nsplitter requires n >= 2");
    Eigen::MatrixXd u(n, n);
    u.col(0) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    for (int c = 1; c < n; ++c) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(n, c);
        for (int prev = 0; prev < c; ++prev) {
            v -= u.col(prev).dot(v) * u.col(prev);
        }
        u.col(c) = v / v.norm();
    }
    return PassiveNetwork(std::move(u));
}

}  // namespace sqc
