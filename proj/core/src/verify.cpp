#include "sqc/verify.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "sqc/coupling.hpp"
#include "sqc/fock.hpp"
#include "sqc/gaussian.hpp"

namespace sqc {

double VerifyCase::difference() const {
    return std::abs(covariance_value - oracle_value);
}

namespace {

struct SystemSpec {
    std::string name;
    CouplingMatrix coupling;
    std::vector<std::pair<std::string, JointQuadrature>> quadratures;
};

JointQuadrature x_only(const Eigen::VectorXd& x) {
    return JointQuadrature{x, Eigen::VectorXd::Zero(x.size())};
}

JointQuadrature p_only(const Eigen::VectorXd& p) {
    return JointQuadrature{Eigen::VectorXd::Zero(p.size()), p};
}

Eigen::VectorXd unit(int n, int i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(i) = 1.0;
    return v;
}

Eigen::VectorXd pair_diff(int n, int i, int j) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(i) = 1.0;
    v(j) = -1.0;
    return v;
}

std::vector<SystemSpec> build_systems(bool quick) {
    std::vector<SystemSpec> systems;

    Eigen::MatrixXd one(1, 1);
    one(0, 0) = 1.0;
    systems.push_back({"one_mode",
                       CouplingMatrix(one),
                       {{"X", x_only(Eigen::VectorXd::Ones(1))},
                        {"P", p_only(Eigen::VectorXd::Ones(1))}}});

    Eigen::MatrixXd pair = Eigen::MatrixXd::Zero(2, 2);
    pair(0, 1) = pair(1, 0) = 1.0;
    systems.push_back({"two_mode_pair",
                       CouplingMatrix(pair),
                       {{"Xdiff01", x_only(pair_diff(2, 0, 1))},
                        {"Psum", p_only(Eigen::VectorXd::Ones(2))},
                        {"Xsum", x_only(Eigen::VectorXd::Ones(2))},
                        {"X0", x_only(unit(2, 0))}}});
    if (quick) return systems;

    Eigen::VectorXd alternating(3);
    alternating << 1.0, 0.0, -1.0;
    alternating /= std::sqrt(2.0);
    systems.push_back({"three_mode_chain",
                       chain_coupling(3, 1.0),
                       {{"Psum", p_only(Eigen::VectorXd::Ones(3))},
                        {"Xdiff02", x_only(pair_diff(3, 0, 2))},
                        {"Xalt", x_only(alternating)},
                        {"P1", p_only(unit(3, 1))}}});

    systems.push_back({"three_mode_complete",
                       complete_graph_coupling(3, 1.0),
                       {{"Psum", p_only(Eigen::VectorXd::Ones(3))},
                        {"Xdiff01", x_only(pair_diff(3, 0, 1))},
                        {"Xsum", x_only(Eigen::VectorXd::Ones(3))},
                        {"P0", p_only(unit(3, 0))}}});
    return systems;
}

}  // namespace

VerifyReport oracle_agreement(const VerifyOptions& options) {
    VerifyReport report;
    const double kTimes[] = {0.1, 0.2, 0.3};

    for (const SystemSpec& system : build_systems(options.quick)) {
        const int n = system.coupling.size();
        FockConfig config;
        config.mode_count = n;
        config.cutoff = options.cutoff;
        FockConfig recheck_config = config;
        recheck_config.cutoff += 4;
        const FockOracle base(system.coupling, config);
        const FockOracle recheck(system.coupling, recheck_config);

        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(system.coupling.matrix());
        const double max_rate = eig.eigenvalues().cwiseAbs().maxCoeff();
        const GaussianState vacuum = GaussianState::vacuum(n);

        for (const double nominal : kTimes) {
            const double t = std::min(nominal, 0.5 / max_rate);
            const Eigen::VectorXd state = base.evolve_vacuum(t);
            const Eigen::VectorXd recheck_state = recheck.evolve_vacuum(t);
            const GaussianState evolved =
                evolve(vacuum, system.coupling, options.negate_time ? -t : t);
            for (const auto& [label, quadrature] : system.quadratures) {
                VerifyCase entry;
                entry.system = system.name;
                entry.quadrature = label;
                entry.kappa_t = t;
                entry.covariance_value = joint_variance(evolved, quadrature);
                entry.oracle_value = base.variance(state, quadrature);
                const double recheck_value = recheck.variance(recheck_state, quadrature);
                entry.converged = std::abs(entry.oracle_value - recheck_value) < 1e-4;
                report.cases.push_back(entry);
            }
        }
    }

    report.all_agree = true;
    double worst = -1.0;
    for (size_t i = 0; i < report.cases.size(); ++i) {
        const VerifyCase& entry = report.cases[i];
        if (entry.difference() > report.tolerance || !entry.converged) {
            report.all_agree = false;
        }
        if (entry.difference() > worst) {
            worst = entry.difference();
            report.worst_index = static_cast<int>(i);
        }
    }
    return report;
}

}  // namespace sqc
