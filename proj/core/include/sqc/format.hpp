#pragma once

#include <Eigen/Dense>
#include <ostream>
#include <string>

namespace sqc {

// Locale-independent decimal formatting. All CLI-facing numbers go through
// format_sig so repeated runs produce byte-identical output.
std::string format_sig(double value, int significant_digits = 12);

// Full-precision value, round-trip safe ("%.17g").
std::string format_full(double value);

// Row-major CSV dump at full precision, one row per line.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m);

}  // namespace sqc
