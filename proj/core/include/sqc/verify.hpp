#pragma once

#include <string>
#include <vector>

namespace sqc {

struct VerifyCase {
    std::string system;
    std::string quadrature;
    double kappa_t = 0.0;
    double covariance_value = 0.0;
    double oracle_value = 0.0;
    bool converged = false;
    double difference() const;
};

struct VerifyReport {
    std::vector<VerifyCase> cases;
    double tolerance = 1e-3;
    bool all_agree = false;  // every difference within tolerance and converged
    int worst_index = -1;    // case with the largest difference
};

struct VerifyOptions {
    bool quick = false;  // restrict to systems with at most 2 modes
    int cutoff = 12;
    // Evolves the covariance side backwards in time, guaranteeing
    // disagreement; exists so tests can prove a corrupted propagator is
    // caught rather than silently passed.
    bool negate_time = false;
};

// Agreement matrix between the covariance evolution and the number-basis
// oracle: one-mode, two-mode, three-mode chain, and three-mode complete
// graph systems at kappa t in {0.1, 0.2, 0.3}, each clipped to the oracle's
// |lambda_max * t| <= 0.5 safety bound (the complete graph, whose largest
// rate is 2 kappa, tops out at kappa t = 0.25). Several joint quadratures
// are checked per system.
VerifyReport oracle_agreement(const VerifyOptions& options = {});

}  // namespace sqc
