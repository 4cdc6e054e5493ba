#pragma once

#include <Eigen/Dense>
#include <vector>

namespace sqc {

struct JointQuadrature;

// Conventions used throughout this library, fixed here and nowhere else:
//
//   hbar = 1,  X = (a + a^dag)/sqrt(2),  P = i(a^dag - a)/sqrt(2),
//   vacuum variance 1/2 per quadrature.
//
// A real symmetric coupling matrix G generates the quadratic Hamiltonian
//
//   H = (i/2) sum_{jk} G_jk (a_j^dag a_k^dag - a_j a_k),
//
// so an off-diagonal entry G_jk = kappa is a two-mode squeezer on modes
// (j,k) of strength kappa and a diagonal entry G_jj = g is a degenerate
// single-mode squeezer i(g/2)(a_j^dag^2 - a_j^2). The Heisenberg equations
// close on quadratures as X(t) = exp(Gt) X(0), P(t) = exp(-Gt) P(0); all
// phase-space objects use XXPP ordering (N X rows, then N P rows).
class CouplingMatrix {
public:
    // Requires a square, exactly symmetric, finite matrix with size >= 1.
    explicit CouplingMatrix(Eigen::MatrixXd g);

    static CouplingMatrix zero(int n);

    int size() const { return static_cast<int>(g_.rows()); }
    const Eigen::MatrixXd& matrix() const { return g_; }
    double operator()(int i, int j) const { return g_(i, j); }

private:
    Eigen::MatrixXd g_;
};

// Complete-graph coupling: G_jk = kappa for all j != k, zero diagonal.
// Requires n >= 2 and finite kappa.
CouplingMatrix complete_graph_coupling(int n, double kappa);

// Nearest-neighbour chain: G_{j,j+1} = kappa, zero elsewhere. Requires n >= 2.
CouplingMatrix chain_coupling(int n, double kappa);

enum class ModeBehavior {
    PSqueezed,  // eigenvalue > 0: the P-combination contracts, X expands
    XSqueezed,  // eigenvalue < 0: the X-combination contracts, P expands
    Constant,   // eigenvalue ~ 0: both combinations are constants of motion
};

struct Eigenmode {
    double rate = 0.0;        // eigenvalue of G
    Eigen::VectorXd vector;   // unit-norm eigenvector
    ModeBehavior behavior = ModeBehavior::Constant;
};

class EigenmodeReport {
public:
    EigenmodeReport(std::vector<Eigenmode> modes, double zero_tolerance);

    int count() const { return static_cast<int>(modes_.size()); }
    const Eigenmode& mode(int k) const { return modes_.at(k); }
    const std::vector<Eigenmode>& modes() const { return modes_; }
    double zero_tolerance() const { return zero_tolerance_; }

    Eigen::VectorXd eigenvalues() const;       // descending
    Eigen::MatrixXd eigenvectors() const;      // orthonormal columns, same order

    // The contracting quadrature combination of eigenmode k: the P-combination
    // for a positive rate, the X-combination for a negative rate. For a
    // Constant mode both combinations are frozen; the X-combination is returned.
    JointQuadrature squeezed_quadrature(int k) const;

    // Vacuum-input variance of the squeezed combination after time t:
    // (1/2) exp(-2 |rate| t).
    double squeezed_variance(int k, double t) const;

private:
    std::vector<Eigenmode> modes_;
    double zero_tolerance_;
};

// Spectral decomposition of G with eigenvalues sorted descending and
// classification against |lambda| <= zero_tol. A negative zero_tol (the
// default) selects 1e-9 relative to the spectral radius.
EigenmodeReport eigenmodes(const CouplingMatrix& g, double zero_tol = -1.0);

// Symplectic form in XXPP ordering: [[0, I], [-I, 0]].
Eigen::MatrixXd symplectic_form(int n);

// Phase-space propagator S(t) = blockdiag(exp(Gt), exp(-Gt)). Satisfies
// S Omega S^T = Omega. Throws std::range_error when |lambda_max * t|
// exceeds exponent_cap (the message names the offending eigenvalue).
Eigen::MatrixXd propagator(const CouplingMatrix& g, double t,
                           double exponent_cap = 50.0);

// Real orthogonal mode-mixing network acting as b = U a on annihilation
// operators. Requires U U^T = I to 1e-12.
class PassiveNetwork {
public:
    explicit PassiveNetwork(Eigen::MatrixXd u);
    int size() const { return static_cast<int>(u_.rows()); }
    const Eigen::MatrixXd& matrix() const { return u_; }

private:
    Eigen::MatrixXd u_;
};

// Coupling matrix of the transformed Hamiltonian under b = U a:
// G' = U G U^T. Leaves the spectrum untouched.
CouplingMatrix apply_network(const CouplingMatrix& g, const PassiveNetwork& u);

// Balanced n-way splitter: a real orthogonal matrix whose first column is
// (1,...,1)/sqrt(n), completed by Gram-Schmidt over the standard basis.
// Conjugating diag(-k, k, ..., k) with it yields the uniform matrix with
// diagonal (n-2)k/n and off-diagonal -2k/n. Requires n >= 2.
PassiveNetwork make_nsplitter(int n);

}  // namespace sqc
