#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <sqc/catalog.hpp>
#include <sqc/config.hpp>
#include <sqc/coupling.hpp>
#include <sqc/errors.hpp>
#include <sqc/format.hpp>
#include <sqc/gaussian.hpp>
#include <sqc/modes.hpp>
#include <sqc/qpm.hpp>
#include <sqc/sellmeier.hpp>
#include <sqc/verify.hpp>

using namespace sqc;

namespace {

// Writes to --out when given, standard output otherwise.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::ofstream open_script(const std::string& path) {
    std::ofstream script(path);
    if (!script) throw ConfigError("cannot open plot script '" + path + "'");
    return script;
}

double parse_number(const std::string& text, const std::string& what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ConfigError(what + ": '" + text + "' is not a number");
    }
    return value;
}

std::pair<double, double> parse_range(const std::string& text, const std::string& what) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ConfigError(what + ": expected 'lo:hi', got '" + text + "'");
    }
    const double lo = parse_number(text.substr(0, colon), what);
    const double hi = parse_number(text.substr(colon + 1), what);
    if (!(lo < hi)) throw ConfigError(what + ": need lo < hi, got '" + text + "'");
    return {lo, hi};
}

// "tensor" or "tensor:order", e.g. "yzy" or "zzz:5".
QpmInteraction parse_interaction(const std::string& text, int default_order,
                                 double fundamental_um) {
    QpmInteraction q;
    std::string tensor = text;
    q.order = default_order;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        tensor = text.substr(0, colon);
        const std::string tail = text.substr(colon + 1);
        char* end = nullptr;
        const long order = std::strtol(tail.c_str(), &end, 10);
        if (end == tail.c_str() || *end != '\0' || order < 1 || order > 99) {
            throw ConfigError("interaction '" + text + "': order must be an integer in 1..99");
        }
        q.order = static_cast<int>(order);
    }
    q.tensor = parse_chi_label(tensor);
    q.d_coeff = representative_d_coefficient(q.tensor);
    q.fundamental_um = fundamental_um;
    return q;
}

std::string interaction_name(const QpmInteraction& q) {
    std::ostringstream name;
    name << to_string(q.tensor) << " m=" << q.order;
    return name.str();
}

Scenario load_scenario_file(const std::string& path) {
    return load_scenario(ConfigFile::parse_file(path));
}

SellmeierSet load_dataset(const std::string& path) {
    if (path.empty()) {
        throw ConfigError("no dispersion dataset: pass --dataset or set SQC_DATASET");
    }
    return SellmeierSet::load_file(path);
}

// Temperature window where both axes of the dataset are valid.
std::pair<double, double> dataset_temp_range(const SellmeierSet& set) {
    const AxisDispersion& y = set.axis(Pol::Y);
    const AxisDispersion& z = set.axis(Pol::Z);
    return {std::max(y.temp_min_c, z.temp_min_c), std::min(y.temp_max_c, z.temp_max_c)};
}

// Frequency lattice for scenario kinds that carry no explicit mode labels:
// resonances at even indices, equally spaced.
std::vector<ModeLabel> default_mode_lattice(int n) {
    std::vector<ModeLabel> modes;
    modes.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) modes.push_back(ModeLabel{2 * k, Pol::Z});
    return modes;
}

std::string strip_extension(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

void require_out_for_plot(const std::string& out_path) {
    if (out_path.empty()) {
        throw ConfigError("--plot-script needs --out so the script can name the data file");
    }
}

void write_scenario_header(std::ostream& os, const Scenario& sc) {
    os << "# scenario: " << sc.kind << "\n";
    os << "# mode_count: " << sc.mode_count << "\n";
    os << "# kappa: " << format_sig(sc.kappa) << "\n";
    if (!sc.modes.empty()) {
        os << "# modes:";
        for (const ModeLabel& m : sc.modes) os << " " << to_string(m);
        os << "\n";
    }
}

int cmd_evolve(const std::string& config_path, const std::string& out_path,
               const std::string& plot_path) {
    const Scenario sc = load_scenario_file(config_path);
    std::vector<NamedQuadrature> columns = sc.default_columns();
    const size_t default_count = columns.size();
    columns.insert(columns.end(), sc.extra_quadratures.begin(), sc.extra_quadratures.end());
    const bool photons = sc.kind == "h1";
    if (!plot_path.empty()) require_out_for_plot(out_path);

    Output out(out_path);
    std::ostream& os = out.stream();
    write_scenario_header(os, sc);
    os << "# conventions: hbar = 1, X = (a + a^dag)/sqrt(2), vacuum variance 1/2, "
          "grid in kappa*t\n";
    if (sc.witness) {
        os << "# witness: pair (" << sc.witness->mode_i << ", " << sc.witness->mode_j
           << "), threshold " << format_sig(sc.witness->threshold) << ", gains";
        for (int k = 0; k < sc.witness->gains.size(); ++k) {
            os << " " << format_sig(sc.witness->gains(k));
        }
        os << "\n";
    }
    if (photons) os << "# mean_photons: (var_X + var_P - 1)/2\n";

    os << "kappa_t";
    for (const NamedQuadrature& column : columns) os << "," << column.name;
    if (sc.witness) os << ",witness";
    if (photons) os << ",mean_photons";
    os << "\n";

    const GaussianState vac = GaussianState::vacuum(sc.mode_count);
    for (const double kappa_t : sc.grid.times()) {
        const GaussianState state = evolve(vac, sc.coupling, kappa_t / sc.kappa);
        os << format_sig(kappa_t);
        double var_sum = 0.0;
        for (size_t c = 0; c < columns.size(); ++c) {
            const double value = joint_variance(state, columns[c].quadrature);
            // Photon count comes from the scenario's own X and P pair, not
            // from any user-added quadrature columns.
            if (c < default_count) var_sum += value;
            os << "," << format_sig(value);
        }
        if (sc.witness) {
            const WitnessResult w =
                witness_pair(state, sc.witness->mode_i, sc.witness->mode_j,
                             sc.witness->gains, sc.witness->threshold);
            os << "," << format_sig(w.value);
        }
        if (photons) os << "," << format_sig((var_sum - 1.0) / 2.0);
        os << "\n";
    }

    if (!plot_path.empty()) {
        std::ofstream script = open_script(plot_path);
        script << "set datafile separator ','\n";
        script << "set key autotitle columnhead\n";
        script << "set xlabel 'kappa t'\n";
        script << "set ylabel 'variance'\n";
        script << "set logscale y\n";
        const size_t total = columns.size() + (sc.witness ? 1 : 0) + (photons ? 1 : 0);
        script << "plot";
        for (size_t c = 0; c < total; ++c) {
            script << (c == 0 ? " " : ", ") << (c == 0 ? "'" + out_path + "'" : "''")
                   << " using 1:" << c + 2 << " with lines";
        }
        script << "\n";
    }
    return 0;
}

const char* behavior_name(ModeBehavior behavior) {
    switch (behavior) {
        case ModeBehavior::PSqueezed: return "P-squeezed";
        case ModeBehavior::XSqueezed: return "X-squeezed";
        case ModeBehavior::Constant: return "constant";
    }
    return "?";
}

int cmd_eigenmodes(const std::string& config_path, const std::string& out_path,
                   bool dump_matrix) {
    const Scenario sc = load_scenario_file(config_path);
    const EigenmodeReport report = eigenmodes(sc.coupling);

    Output out(out_path);
    std::ostream& os = out.stream();
    write_scenario_header(os, sc);
    if (dump_matrix) {
        os << "# coupling matrix (row-major, full precision)\n";
        write_matrix_csv(os, sc.coupling.matrix());
    }
    os << "# zero_tolerance: " << format_sig(report.zero_tolerance()) << "\n";
    for (int k = 0; k < report.count(); ++k) {
        const Eigenmode& mode = report.mode(k);
        os << "mode " << k << ": rate " << format_sig(mode.rate) << " ["
           << behavior_name(mode.behavior) << "] vector (";
        for (int c = 0; c < mode.vector.size(); ++c) {
            os << (c ? ", " : "") << format_sig(mode.vector(c));
        }
        os << ")\n";
    }
    return 0;
}

int cmd_check(const std::string& config_path, const std::string& out_path) {
    const Scenario sc = load_scenario_file(config_path);
    const std::vector<ModeLabel> modes =
        sc.modes.empty() ? default_mode_lattice(sc.mode_count) : sc.modes;
    const RealizabilityVerdict verdict = realizability_check(sc.coupling, modes);

    Output out(out_path);
    std::ostream& os = out.stream();
    write_scenario_header(os, sc);
    os << "# mode frequency indices:";
    for (const ModeLabel& m : modes) os << " " << m.freq_index;
    os << "\n";
    os << "realizable: " << (verdict.realizable ? "yes" : "no") << "\n";
    os << "conflicts: " << verdict.conflicts.size() << "\n";
    for (const RealizabilityConflict& conflict : verdict.conflicts) {
        os << "conflict at pump frequency " << conflict.pump_freq_index << ":";
        for (const auto& [i, j, value] : conflict.entries) {
            os << " (" << i << "," << j << ")=" << format_sig(value);
        }
        os << "\n";
    }
    return verdict.realizable ? 0 : 1;
}

void write_interaction_header(std::ostream& os, const SellmeierSet& set,
                              const QpmInteraction& q, const char* tag) {
    os << "# " << tag << ": " << interaction_name(q) << ", fundamental "
       << format_sig(q.fundamental_um) << " um, d = " << format_sig(q.d_coeff)
       << " pm/V (material " << set.material() << ")\n";
}

int cmd_qpm_period(const std::string& dataset_path, const std::string& tensor, int order,
                   double temp_c, double lambda_um, const std::string& out_path) {
    const SellmeierSet set = load_dataset(dataset_path);
    QpmInteraction q = parse_interaction(tensor, order, lambda_um);
    const double period = qpm_period(set, q, temp_c);
    Output out(out_path);
    out.stream() << format_sig(period) << "\n";
    return 0;
}

int cmd_qpm_curve(const std::string& dataset_path, const std::string& tensor, int order,
                  double lambda_um, double temp_c, double period_um, double length_mm,
                  const std::string& temp_range_text, int steps,
                  const std::string& out_path, const std::string& plot_path) {
    const SellmeierSet set = load_dataset(dataset_path);
    QpmInteraction q = parse_interaction(tensor, order, lambda_um);
    if (period_um <= 0.0) period_um = qpm_period(set, q, temp_c);
    const std::pair<double, double> temp_range =
        temp_range_text.empty() ? dataset_temp_range(set)
                                : parse_range(temp_range_text, "--temp-range");
    if (!plot_path.empty()) require_out_for_plot(out_path);

    const TuningCurve curve = shg_curve(set, q, period_um, length_mm, temp_range, steps);
    const double top = *std::max_element(curve.power.begin(), curve.power.end());
    if (!(top > 0.0)) throw std::runtime_error("tuning curve vanished over the window");

    Output out(out_path);
    std::ostream& os = out.stream();
    write_interaction_header(os, set, q, "interaction");
    os << "# period_um: " << format_sig(curve.period_um)
       << ", length_mm: " << format_sig(curve.length_mm) << "\n";
    os << "# power normalized to a column maximum of 1 (raw maximum "
       << format_sig(top) << ")\n";
    for (const TuningPeak& peak : curve.peaks) {
        os << "# peak: temp_c " << format_sig(peak.temp_c) << ", lobe " << peak.lobe
           << ", power " << format_sig(peak.value / top) << "\n";
    }
    os << "temperature_c,power_normalized\n";
    for (size_t r = 0; r < curve.temps_c.size(); ++r) {
        os << format_sig(curve.temps_c[r]) << "," << format_sig(curve.power[r] / top)
           << "\n";
    }

    if (!plot_path.empty()) {
        std::ofstream script = open_script(plot_path);
        script << "set datafile separator ','\n";
        script << "set xlabel 'temperature (C)'\n";
        script << "set ylabel 'normalized efficiency'\n";
        script << "plot '" << out_path << "' every ::1 using 1:2 with lines title '"
               << interaction_name(q) << "'\n";
    }
    return 0;
}

int cmd_qpm_concur(const std::string& dataset_path, const std::string& a_text,
                   const std::string& b_text, double lambda_um,
                   const std::string& period_range_text,
                   const std::string& temp_range_text, const ConcurrenceOptions& options,
                   const std::string& out_path, const std::string& plot_path) {
    const SellmeierSet set = load_dataset(dataset_path);
    const QpmInteraction a = parse_interaction(a_text, 1, lambda_um);
    const QpmInteraction b = parse_interaction(b_text, 5, lambda_um);
    const std::pair<double, double> period_range =
        parse_range(period_range_text, "--period-range");
    const std::pair<double, double> temp_range =
        temp_range_text.empty() ? dataset_temp_range(set)
                                : parse_range(temp_range_text, "--temp-range");
    if (!plot_path.empty()) require_out_for_plot(out_path);

    const std::vector<Concurrence> hits =
        find_concurrences(set, a, b, period_range, temp_range, options);

    Output out(out_path);
    std::ostream& os = out.stream();
    write_interaction_header(os, set, a, "interaction a");
    write_interaction_header(os, set, b, "interaction b");
    os << "# period window " << format_sig(period_range.first) << ".."
       << format_sig(period_range.second) << " um, temperature window "
       << format_sig(temp_range.first) << ".." << format_sig(temp_range.second)
       << " C, lobes to depth " << options.lobe_depth << ", length "
       << format_sig(options.length_mm) << " mm\n";
    os << "period_um,temp_c,lobe_a,lobe_b,efficiency\n";
    for (const Concurrence& hit : hits) {
        os << format_sig(hit.period_um) << "," << format_sig(hit.temp_c) << ","
           << hit.lobe_a << "," << hit.lobe_b << "," << format_sig(hit.efficiency)
           << "\n";
    }
    if (hits.empty()) {
        os << "# no concurrence in the searched window\n";
        return 1;
    }

    if (!plot_path.empty()) {
        // Overlay of both tuning curves at the strongest concurrence period,
        // each normalized to its own maximum.
        const Concurrence& best = hits.front();
        const std::string stem = strip_extension(out_path);
        const std::string path_a = stem + ".curve_a.csv";
        const std::string path_b = stem + ".curve_b.csv";
        const QpmInteraction* qs[2] = {&a, &b};
        const std::string* paths[2] = {&path_a, &path_b};
        for (int c = 0; c < 2; ++c) {
            const TuningCurve curve = shg_curve(set, *qs[c], best.period_um,
                                                options.length_mm, temp_range, 2001);
            const double top =
                *std::max_element(curve.power.begin(), curve.power.end());
            std::ofstream side(*paths[c]);
            if (!side) throw ConfigError("cannot open curve file '" + *paths[c] + "'");
            side << "temperature_c,power_normalized\n";
            for (size_t r = 0; r < curve.temps_c.size(); ++r) {
                side << format_sig(curve.temps_c[r]) << ","
                     << format_sig(curve.power[r] / top) << "\n";
            }
        }
        std::ofstream script = open_script(plot_path);
        script << "set datafile separator ','\n";
        script << "set xlabel 'temperature (C)'\n";
        script << "set ylabel 'normalized efficiency'\n";
        script << "set arrow from " << format_sig(best.temp_c)
               << ", graph 0 to " << format_sig(best.temp_c)
               << ", graph 1 nohead dashtype 2\n";
        script << "plot '" << path_a << "' every ::1 using 1:2 with lines title '"
               << interaction_name(a) << " at " << format_sig(best.period_um)
               << " um', '" << path_b << "' every ::1 using 1:2 with lines title '"
               << interaction_name(b) << "'\n";
    }
    return 0;
}

int cmd_verify(bool quick, int cutoff, bool mutate_negate_time,
               const std::string& out_path) {
    VerifyOptions options;
    options.quick = quick;
    options.cutoff = cutoff;
    options.negate_time = mutate_negate_time;
    const VerifyReport report = oracle_agreement(options);

    Output out(out_path);
    std::ostream& os = out.stream();
    os << "# covariance evolution vs number-basis oracle, tolerance "
       << format_sig(report.tolerance) << ", " << report.cases.size() << " cases\n";
    os << "system,quadrature,kappa_t,covariance,oracle,difference,converged\n";
    for (const VerifyCase& c : report.cases) {
        os << c.system << "," << c.quadrature << "," << format_sig(c.kappa_t) << ","
           << format_sig(c.covariance_value) << "," << format_sig(c.oracle_value) << ","
           << format_sig(c.difference()) << "," << (c.converged ? "yes" : "no") << "\n";
    }
    if (report.worst_index >= 0) {
        const VerifyCase& w = report.cases[static_cast<size_t>(report.worst_index)];
        os << "worst: " << w.system << " " << w.quadrature << " at kappa_t "
           << format_sig(w.kappa_t) << ", difference " << format_sig(w.difference())
           << "\n";
    }
    os << "result: " << (report.all_agree ? "PASS" : "FAIL") << "\n";
    return report.all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concurrent chi(2) multimode squeezing toolkit: scenario evolution, "
                 "pump realizability checks, and quasi-phase-matching design"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string plot_path;
    std::string dataset_path;
    bool dump_matrix = false;

    CLI::App* evolve_cmd = app.add_subcommand(
        "evolve", "Evolve vacuum under a scenario and tabulate joint-quadrature variances");
    evolve_cmd->add_option("--config", config_path, "scenario config file")->required();
    evolve_cmd->add_option("--out", out_path, "CSV output path (default stdout)");
    evolve_cmd->add_option("--plot-script", plot_path,
                           "write a gnuplot script for the CSV (needs --out)");

    CLI::App* eigen_cmd = app.add_subcommand(
        "eigenmodes", "Print the spectral decomposition of a scenario's coupling matrix");
    eigen_cmd->add_option("--config", config_path, "scenario config file")->required();
    eigen_cmd->add_option("--out", out_path, "output path (default stdout)");
    eigen_cmd->add_flag("--dump-matrix", dump_matrix,
                        "also dump the coupling matrix at full precision");

    CLI::App* check_cmd = app.add_subcommand(
        "check", "Report whether independent pump fields can drive the scenario's "
                 "coupling matrix (exit 1 when they cannot)");
    check_cmd->add_option("--config", config_path, "scenario config file")->required();
    check_cmd->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* qpm_cmd =
        app.add_subcommand("qpm", "Quasi-phase-matching design against a dispersion dataset");
    qpm_cmd->require_subcommand(1);

    std::string tensor;
    int order = 1;
    double temp_c = 25.0;
    double lambda_um = 1.064;
    double period_um = 0.0;
    double length_mm = 10.0;
    int steps = 1001;
    std::string temp_range_text;
    std::string period_range_text;
    std::string interaction_a = "yzy:1";
    std::string interaction_b = "zzz:5";
    ConcurrenceOptions concur_options;

    CLI::App* period_cmd = qpm_cmd->add_subcommand(
        "period", "Print the grating period phase-matching an interaction");
    period_cmd->add_option("tensor", tensor, "tensor element (pump polarization first)")
        ->required();
    period_cmd->add_option("--dataset", dataset_path, "dispersion dataset")
        ->envname("SQC_DATASET");
    period_cmd->add_option("--order", order, "grating order m >= 1");
    period_cmd->add_option("--temp", temp_c, "temperature, C");
    period_cmd->add_option("--lambda", lambda_um, "fundamental wavelength, um");
    period_cmd->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* curve_cmd = qpm_cmd->add_subcommand(
        "curve", "Temperature tuning curve at a fixed grating period (CSV)");
    curve_cmd->add_option("tensor", tensor, "tensor element (pump polarization first)")
        ->required();
    curve_cmd->add_option("--dataset", dataset_path, "dispersion dataset")
        ->envname("SQC_DATASET");
    curve_cmd->add_option("--order", order, "grating order m >= 1");
    curve_cmd->add_option("--temp", temp_c, "period solve temperature when --period is absent");
    curve_cmd->add_option("--lambda", lambda_um, "fundamental wavelength, um");
    curve_cmd->add_option("--period", period_um, "grating period, um (default: solved)");
    curve_cmd->add_option("--length", length_mm, "crystal length, mm");
    curve_cmd->add_option("--temp-range", temp_range_text,
                          "lo:hi window, C (default: dataset validity)");
    curve_cmd->add_option("--steps", steps, "temperature samples");
    curve_cmd->add_option("--out", out_path, "CSV output path (default stdout)");
    curve_cmd->add_option("--plot-script", plot_path,
                          "write a gnuplot script for the CSV (needs --out)");

    CLI::App* concur_cmd = qpm_cmd->add_subcommand(
        "concur", "Find periods where two interactions phase-match at one temperature");
    concur_cmd->add_option("--dataset", dataset_path, "dispersion dataset")
        ->envname("SQC_DATASET");
    concur_cmd->add_option("--a", interaction_a, "first interaction, tensor[:order]");
    concur_cmd->add_option("--b", interaction_b, "second interaction, tensor[:order]");
    concur_cmd->add_option("--lambda", lambda_um, "fundamental wavelength, um");
    concur_cmd->add_option("--period-range", period_range_text, "lo:hi window, um")
        ->required();
    concur_cmd->add_option("--temp-range", temp_range_text,
                           "lo:hi window, C (default: dataset validity)");
    concur_cmd->add_option("--lobes", concur_options.lobe_depth,
                           "include sinc lobes to this depth (0 = main peaks only)");
    concur_cmd->add_option("--length", concur_options.length_mm, "crystal length, mm");
    concur_cmd->add_option("--temp-tolerance", concur_options.temp_tolerance_c,
                           "peak separation counted as one point, C");
    concur_cmd->add_option("--period-step", concur_options.period_step_um,
                           "period scan step, um");
    concur_cmd->add_option("--temp-step", concur_options.temp_step_c,
                           "temperature scan step, C");
    concur_cmd->add_option("--out", out_path, "CSV output path (default stdout)");
    concur_cmd->add_option("--plot-script", plot_path,
                           "write a gnuplot overlay of both curves at the best period "
                           "(needs --out)");

    bool quick = false;
    int cutoff = 12;
    bool mutate_negate_time = false;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Cross-check covariance evolution against the number-basis oracle");
    verify_cmd->add_flag("--quick", quick, "systems with at most two modes only");
    verify_cmd->add_option("--cutoff", cutoff, "oracle occupation cutoff per mode");
    verify_cmd->add_flag("--mutate-negate-time", mutate_negate_time,
                         "self-test hook: evolve the covariance side backwards so the "
                         "comparison must fail");
    verify_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (evolve_cmd->parsed()) return cmd_evolve(config_path, out_path, plot_path);
        if (eigen_cmd->parsed()) return cmd_eigenmodes(config_path, out_path, dump_matrix);
        if (check_cmd->parsed()) return cmd_check(config_path, out_path);
        if (period_cmd->parsed()) {
            return cmd_qpm_period(dataset_path, tensor, order, temp_c, lambda_um, out_path);
        }
        if (curve_cmd->parsed()) {
            return cmd_qpm_curve(dataset_path, tensor, order, lambda_um, temp_c, period_um,
                                 length_mm, temp_range_text, steps, out_path, plot_path);
        }
        if (concur_cmd->parsed()) {
            return cmd_qpm_concur(dataset_path, interaction_a, interaction_b, lambda_um,
                                  period_range_text, temp_range_text, concur_options,
                                  out_path, plot_path);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(quick, cutoff, mutate_negate_time, out_path);
        }
        std::cerr << "sqc: no subcommand\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "sqc: " << e.what() << "\n";
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "sqc: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "sqc: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sqc: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "sqc: " << e.what() << "\n";
        return 3;
    }
}
