#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sqc/coupling.hpp"
#include "sqc/gaussian.hpp"
#include "sqc/modes.hpp"

namespace sqc {

// Line-oriented config format: [section] headers (dots allowed for nesting,
// e.g. [quadrature.sum]), key = value pairs, and comment lines starting with
// '#' or ';'. Duplicate keys, keys outside a section, and malformed lines
// are rejected with the offending line number.
class ConfigFile {
  public:
    static ConfigFile parse(std::istream& in, const std::string& origin = "<stream>");
    static ConfigFile parse_file(const std::string& path);

    const std::string& origin() const { return origin_; }
    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;
    std::vector<std::string> sections() const;
    std::vector<std::string> keys(const std::string& section) const;

    // Throws ConfigError naming the section and key when absent.
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    int get_int(const std::string& section, const std::string& key) const;
    int get_int_or(const std::string& section, const std::string& key, int fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key,
                     bool fallback) const;

    // Rejects keys outside `allowed` so typos fail loudly instead of being
    // silently ignored.
    void expect_keys(const std::string& section,
                     const std::vector<std::string>& allowed) const;

  private:
    std::string origin_;
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

// Comma-separated list helper; trims whitespace, drops empty trailing items.
std::vector<std::string> split_list(const std::string& value, char separator = ',');

struct TimeGrid {
    double start = 0.0;
    double stop = 1.0;
    int points = 101;  // sample count, endpoints inclusive
    std::vector<double> times() const;
};

struct WitnessSpec {
    int mode_i = 0;
    int mode_j = 1;
    Eigen::VectorXd gains;  // one entry per mode outside the pair, ascending
    double threshold = 1.0;
};

struct NamedQuadrature {
    std::string name;
    JointQuadrature quadrature;
};

// A fully resolved simulation scenario: the coupling matrix, the time grid,
// and the observables the frontend should tabulate.
struct Scenario {
    std::string kind;
    int mode_count = 1;
    double kappa = 1.0;
    CouplingMatrix coupling = CouplingMatrix::zero(1);
    std::vector<ModeLabel> modes;  // empty for abstract kinds
    TimeGrid grid;
    std::optional<WitnessSpec> witness;
    std::vector<NamedQuadrature> extra_quadratures;

    // Kind-aware observable set: collective P sum and a pair X difference
    // for graph states, both sum/difference families for the splitter-
    // transformed system, plain X/P for one mode, and the conserved
    // alternating-X combination for the three-mode chain.
    std::vector<NamedQuadrature> default_columns() const;
};

// Builds a Scenario from a parsed config. Recognized kinds: h1, h2_chain,
// h3, hN, h3_experimental, h4_experimental, vlb_transformed, singly_pumped,
// custom. Throws ConfigError on unknown kinds, missing sections, or
// inconsistent dimensions.
Scenario load_scenario(const ConfigFile& config);

// Parsers shared by the scenario loader and the frontend.
ModeLabel parse_mode_label(const std::string& text);
PumpField parse_pump_field(const std::string& text);
ChiLabel parse_chi_label(const std::string& text);
Eigen::VectorXd parse_vector(const std::string& text, int expected_size);
Eigen::MatrixXd parse_matrix(const std::string& text);

}  // namespace sqc
