#include "sqc/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sqc/catalog.hpp"
#include "sqc/errors.hpp"

namespace sqc {

namespace {

std::string trim(const std::string& s) {
    size_t begin = 0;
    size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (const char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' &&
            c != '-') {
            return false;
        }
    }
    return true;
}

[[noreturn]] void fail_at(const std::string& origin, int line, const std::string& what) {
    std::ostringstream msg;
    msg << origin << ":" << line << ": " << what;
    throw ConfigError(msg.str());
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream& in, const std::string& origin) {
    ConfigFile config;
    config.origin_ = origin;
    std::string line;
    std::string section;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#' || text.front() == ';') continue;
        if (text.front() == '[') {
            if (text.back() != ']') fail_at(origin, line_number, "unterminated section header");
            section = trim(text.substr(1, text.size() - 2));
            if (!valid_name(section)) {
                fail_at(origin, line_number, "invalid section name '" + section + "'");
            }
            config.sections_[section];
            continue;
        }
        const size_t eq = text.find('=');
        if (eq == std::string::npos) {
            fail_at(origin, line_number, "expected 'key = value' or '[section]'");
        }
        if (section.empty()) {
            fail_at(origin, line_number, "key outside any section");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (!valid_name(key)) fail_at(origin, line_number, "invalid key name '" + key + "'");
        auto& entries = config.sections_[section];
        if (!entries.emplace(key, value).second) {
            fail_at(origin, line_number,
                    "duplicate key '" + key + "' in section [" + section + "]");
        }
    }
    return config;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse(in, path);
}

bool ConfigFile::has_section(const std::string& section) const {
    return sections_.count(section) != 0;
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) != 0;
}

std::vector<std::string> ConfigFile::sections() const {
    std::vector<std::string> names;
    for (const auto& [name, entries] : sections_) names.push_back(name);
    return names;
}

std::vector<std::string> ConfigFile::keys(const std::string& section) const {
    std::vector<std::string> names;
    const auto it = sections_.find(section);
    if (it == sections_.end()) return names;
    for (const auto& [key, value] : it->second) names.push_back(key);
    return names;
}

std::string ConfigFile::get(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    if (it == sections_.end()) {
        throw ConfigError(origin_ + ": missing section [" + section + "]");
    }
    const auto kit = it->second.find(key);
    if (kit == it->second.end()) {
        throw ConfigError(origin_ + ": missing key '" + key + "' in section [" + section +
                          "]");
    }
    return kit->second;
}

std::string ConfigFile::get_or(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

double ConfigFile::get_double(const std::string& section, const std::string& key) const {
    const std::string text = get(section, key);
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(value)) {
        throw ConfigError(origin_ + ": key '" + key + "' in [" + section +
                          "] is not a finite number: '" + text + "'");
    }
    return value;
}

double ConfigFile::get_double_or(const std::string& section, const std::string& key,
                                 double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

int ConfigFile::get_int(const std::string& section, const std::string& key) const {
    const std::string text = get(section, key);
    errno = 0;
    char* end = nullptr;
    const long value = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE || value > 1000000000L ||
        value < -1000000000L) {
        throw ConfigError(origin_ + ": key '" + key + "' in [" + section +
                          "] is not an integer: '" + text + "'");
    }
    return static_cast<int>(value);
}

int ConfigFile::get_int_or(const std::string& section, const std::string& key,
                           int fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

bool ConfigFile::get_bool_or(const std::string& section, const std::string& key,
                             bool fallback) const {
    if (!has(section, key)) return fallback;
    std::string text = get(section, key);
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigError(origin_ + ": key '" + key + "' in [" + section +
                      "] is not a boolean: '" + text + "'");
}

void ConfigFile::expect_keys(const std::string& section,
                             const std::vector<std::string>& allowed) const {
    for (const std::string& key : keys(section)) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            std::ostringstream msg;
            msg << origin_ << ": unexpected key '" << key << "' in section [" << section
                << "]; allowed:";
            for (const std::string& a : allowed) msg << " " << a;
            throw ConfigError(msg.str());
        }
    }
}

std::vector<std::string> split_list(const std::string& value, char separator) {
    std::vector<std::string> items;
    std::string current;
    std::istringstream in(value);
    while (std::getline(in, current, separator)) items.push_back(trim(current));
    while (!items.empty() && items.back().empty()) items.pop_back();
    return items;
}

std::vector<double> TimeGrid::times() const {
    std::vector<double> result;
    result.reserve(static_cast<size_t>(points));
    if (points == 1) {
        result.push_back(start);
        return result;
    }
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) {
        result.push_back(i + 1 == points ? stop : start + step * i);
    }
    return result;
}

ModeLabel parse_mode_label(const std::string& text) {
    const std::string s = trim(text);
    const size_t colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size()) {
        throw ConfigError("mode label must look like 'y:0', got '" + s + "'");
    }
    const std::string pol = trim(s.substr(0, colon));
    if (pol.size() != 1 || (pol[0] != 'y' && pol[0] != 'z')) {
        throw ConfigError("mode polarization must be y or z, got '" + s + "'");
    }
    errno = 0;
    char* end = nullptr;
    const std::string index_text = trim(s.substr(colon + 1));
    const long index = std::strtol(index_text.c_str(), &end, 10);
    if (end == index_text.c_str() || *end != '\0' || errno == ERANGE ||
        std::labs(index) > 1000000L) {
        throw ConfigError("mode frequency index must be an integer, got '" + s + "'");
    }
    return ModeLabel{static_cast<int>(index), pol_from_char(pol[0])};
}

PumpField parse_pump_field(const std::string& text) {
    const std::vector<std::string> parts = split_list(trim(text), ':');
    if (parts.size() != 2 && parts.size() != 3) {
        throw ConfigError("pump field must look like 'y:2' or 'y:2:1.5', got '" + text +
                          "'");
    }
    const ModeLabel as_mode = parse_mode_label(parts[0] + ":" + parts[1]);
    PumpField pump{as_mode.freq_index, as_mode.pol, 1.0};
    if (parts.size() == 3) {
        errno = 0;
        char* end = nullptr;
        pump.amplitude = std::strtod(parts[2].c_str(), &end);
        if (end == parts[2].c_str() || *end != '\0' || errno == ERANGE ||
            !std::isfinite(pump.amplitude) || pump.amplitude < 0.0) {
            throw ConfigError("pump amplitude must be a finite number >= 0, got '" + text +
                              "'");
        }
    }
    return pump;
}

ChiLabel parse_chi_label(const std::string& text) {
    const std::string s = trim(text);
    if (s == "yzy") return ChiLabel::yzy;
    if (s == "zzz") return ChiLabel::zzz;
    if (s == "yyy") return ChiLabel::yyy;
    if (s == "yzz") return ChiLabel::yzz;
    if (s == "zyy") return ChiLabel::zyy;
    throw ConfigError("unknown tensor element '" + s +
                      "'; expected one of yzy, zzz, yyy, yzz, zyy");
}

Eigen::VectorXd parse_vector(const std::string& text, int expected_size) {
    const std::vector<std::string> parts = split_list(text);
    if (expected_size >= 0 && static_cast<int>(parts.size()) != expected_size) {
        std::ostringstream msg;
        msg << "expected " << expected_size << " entries, got " << parts.size() << " in '"
            << text << "'";
        throw ConfigError(msg.str());
    }
    Eigen::VectorXd v(static_cast<int>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i) {
        errno = 0;
        char* end = nullptr;
        v(static_cast<int>(i)) = std::strtod(parts[i].c_str(), &end);
        if (end == parts[i].c_str() || *end != '\0' || errno == ERANGE ||
            !std::isfinite(v(static_cast<int>(i)))) {
            throw ConfigError("vector entry is not a finite number: '" + parts[i] + "'");
        }
    }
    return v;
}

Eigen::MatrixXd parse_matrix(const std::string& text) {
    const std::vector<std::string> rows = split_list(text, ';');
    if (rows.empty()) throw ConfigError("matrix text is empty");
    Eigen::MatrixXd m;
    for (size_t r = 0; r < rows.size(); ++r) {
        const Eigen::VectorXd row = parse_vector(rows[r], -1);
        if (r == 0) {
            m.resize(static_cast<int>(rows.size()), row.size());
        } else if (row.size() != m.cols()) {
            throw ConfigError("matrix rows have inconsistent lengths");
        }
        m.row(static_cast<int>(r)) = row.transpose();
    }
    return m;
}

namespace {

std::vector<ModeLabel> parse_mode_list(const ConfigFile& config) {
    config.expect_keys("modes", {"list"});
    std::vector<ModeLabel> modes;
    for (const std::string& item : split_list(config.get("modes", "list"))) {
        modes.push_back(parse_mode_label(item));
    }
    if (modes.empty()) throw ConfigError("[modes] list is empty");
    return modes;
}

std::vector<PumpField> parse_pump_list(const ConfigFile& config) {
    config.expect_keys("pumps", {"list", "flip"});
    std::vector<PumpField> pumps;
    for (const std::string& item : split_list(config.get("pumps", "list"))) {
        pumps.push_back(parse_pump_field(item));
    }
    if (pumps.empty()) throw ConfigError("[pumps] list is empty");
    return pumps;
}

// Optional per-pump phase toggle: entries name pumps whose phase is pi
// instead of 0, which negates every term the pump drives. Off by default.
std::vector<PumpField> parse_pump_flips(const ConfigFile& config,
                                        const std::vector<PumpField>& pumps) {
    std::vector<PumpField> flips;
    if (!config.has("pumps", "flip")) return flips;
    for (const std::string& item : split_list(config.get("pumps", "flip"))) {
        const PumpField f = parse_pump_field(item);
        const bool known = std::any_of(pumps.begin(), pumps.end(),
                                       [&f](const PumpField& p) {
                                           return p.pol == f.pol &&
                                                  p.freq_index == f.freq_index;
                                       });
        if (!known) {
            throw ConfigError(config.origin() + ": [pumps] flip entry '" + item +
                              "' does not match any pump in the list");
        }
        flips.push_back(f);
    }
    return flips;
}

std::vector<ChiElement> parse_chi_section(const ConfigFile& config) {
    std::vector<ChiElement> chis;
    for (const std::string& key : config.keys("chi")) {
        ChiElement chi;
        chi.label = parse_chi_label(key);
        chi.value = config.get_double("chi", key);
        if (chi.value == 0.0) {
            throw ConfigError("tensor element " + key + " must be nonzero");
        }
        chis.push_back(chi);
    }
    if (chis.empty()) throw ConfigError("[chi] section lists no tensor elements");
    return chis;
}

NamedQuadrature make_column(const std::string& name, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& p) {
    return NamedQuadrature{name, JointQuadrature{x, p}};
}

}  // namespace

std::vector<NamedQuadrature> Scenario::default_columns() const {
    const int n = mode_count;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    std::vector<NamedQuadrature> columns;
    if (n == 1) {
        columns.push_back(make_column("var_X", ones, zero));
        columns.push_back(make_column("var_P", zero, ones));
        return columns;
    }
    if (kind == "hN" && n == 2) {
        // The two-mode complete graph degenerates to a single squeezer in
        // the collective basis, so the one-mode column pair applies.
        const Eigen::VectorXd collective = ones / std::sqrt(2.0);
        columns.push_back(make_column("var_X", collective, zero));
        columns.push_back(make_column("var_P", zero, collective));
        return columns;
    }
    auto pair_diff = [&](int i, int j) {
        Eigen::VectorXd v = zero;
        v(i) = 1.0;
        v(j) = -1.0;
        return v;
    };
    auto pair_name = [](const char* prefix, int i, int j) {
        std::ostringstream name;
        name << prefix << i << j;
        return name.str();
    };
    if (kind == "vlb_transformed") {
        columns.push_back(make_column("var_Xsum", ones, zero));
        columns.push_back(make_column(pair_name("var_Pdiff", 0, 1), zero, pair_diff(0, 1)));
        columns.push_back(make_column("var_Psum", zero, ones));
        columns.push_back(make_column(pair_name("var_Xdiff", 0, 1), pair_diff(0, 1), zero));
        return columns;
    }
    columns.push_back(make_column("var_Psum", zero, ones));
    if (kind == "h2_chain") {
        columns.push_back(
            make_column(pair_name("var_Xdiff", 0, n - 1), pair_diff(0, n - 1), zero));
        if (n == 3) {
            Eigen::VectorXd alternating(3);
            alternating << 1.0, 0.0, -1.0;
            alternating /= std::sqrt(2.0);
            columns.push_back(make_column("var_Xconst", alternating, zero));
        }
    } else {
        columns.push_back(make_column(pair_name("var_Xdiff", 0, 1), pair_diff(0, 1), zero));
    }
    return columns;
}

namespace {

void check_mode_index(const ConfigFile& config, int index, int n, const char* key) {
    if (index < 0 || index >= n) {
        std::ostringstream msg;
        msg << config.origin() << ": [witness] " << key << " = " << index
            << " is outside 0.." << n - 1;
        throw ConfigError(msg.str());
    }
}

// parse_vector with the key named in the error.
Eigen::VectorXd vector_key(const ConfigFile& config, const std::string& section,
                           const std::string& key, int expected_size) {
    try {
        return parse_vector(config.get(section, key), expected_size);
    } catch (const ConfigError& e) {
        throw ConfigError(config.origin() + ": key '" + key + "' in [" + section +
                          "]: " + e.what());
    }
}

}  // namespace

Scenario load_scenario(const ConfigFile& config) {
    config.expect_keys("scenario", {"kind", "n", "kappa"});
    Scenario scenario;
    scenario.kind = config.get("scenario", "kind");
    scenario.kappa = config.get_double_or("scenario", "kappa", 1.0);
    if (!(scenario.kappa > 0.0)) {
        throw ConfigError(config.origin() + ": [scenario] kappa must be > 0");
    }
    const double kappa = scenario.kappa;

    const std::string& kind = scenario.kind;
    for (const std::string& section : config.sections()) {
        const bool known =
            section == "scenario" || section == "grid" || section == "witness" ||
            section.rfind("quadrature.", 0) == 0 ||
            (section == "modes" && (kind == "singly_pumped" || kind == "custom")) ||
            (section == "pumps" && kind == "singly_pumped") ||
            (section == "chi" && kind == "singly_pumped") ||
            (section == "coupling" && kind == "custom");
        if (!known) {
            throw ConfigError(config.origin() + ": unexpected section [" + section +
                              "] for scenario kind '" + kind + "'");
        }
    }

    auto fixed_n = [&](int expected) {
        const int n = config.get_int_or("scenario", "n", expected);
        if (n != expected) {
            std::ostringstream msg;
            msg << config.origin() << ": scenario kind '" << kind << "' has n = " << expected
                << ", got " << n;
            throw ConfigError(msg.str());
        }
        return n;
    };
    auto required_n = [&](int minimum) {
        if (!config.has("scenario", "n")) {
            throw ConfigError(config.origin() + ": scenario kind '" + kind +
                              "' requires [scenario] n");
        }
        const int n = config.get_int("scenario", "n");
        if (n < minimum || n > 24) {
            std::ostringstream msg;
            msg << config.origin() << ": [scenario] n = " << n << " outside " << minimum
                << "..24";
            throw ConfigError(msg.str());
        }
        return n;
    };

    if (kind == "h1") {
        scenario.mode_count = fixed_n(1);
        Eigen::MatrixXd g(1, 1);
        g(0, 0) = kappa;
        scenario.coupling = CouplingMatrix(g);
    } else if (kind == "h2_chain") {
        scenario.mode_count = required_n(2);
        scenario.coupling = chain_coupling(scenario.mode_count, kappa);
    } else if (kind == "h3") {
        scenario.mode_count = fixed_n(3);
        scenario.coupling = complete_graph_coupling(3, kappa);
    } else if (kind == "hN") {
        scenario.mode_count = required_n(2);
        scenario.coupling = complete_graph_coupling(scenario.mode_count, kappa);
    } else if (kind == "h3_experimental") {
        scenario.mode_count = fixed_n(3);
        ExperimentalBuild build = build_h3_experimental(kappa);
        scenario.coupling = build.coupling;
        scenario.modes = build.graph.vertices;
    } else if (kind == "h4_experimental") {
        scenario.mode_count = fixed_n(4);
        ExperimentalBuild build = build_h4_experimental(kappa);
        scenario.coupling = build.coupling;
        scenario.modes = build.graph.vertices;
    } else if (kind == "vlb_transformed") {
        scenario.mode_count = required_n(2);
        Eigen::VectorXd rates = Eigen::VectorXd::Constant(scenario.mode_count, kappa);
        rates(0) = -kappa;
        scenario.coupling = apply_network(CouplingMatrix(rates.asDiagonal()),
                                          make_nsplitter(scenario.mode_count));
    } else if (kind == "singly_pumped") {
        scenario.modes = parse_mode_list(config);
        scenario.mode_count = static_cast<int>(scenario.modes.size());
        const std::vector<PumpField> pumps = parse_pump_list(config);
        if (pumps.size() != 1) {
            throw ConfigError(config.origin() +
                              ": singly_pumped takes exactly one pump field");
        }
        CouplingGraph graph =
            enumerate_terms(scenario.modes, pumps, parse_chi_section(config));
        for (const PumpField& f : parse_pump_flips(config, pumps)) {
            for (InteractionTerm& t : graph.edges) {
                if (t.pump.pol == f.pol && t.pump.freq_index == f.freq_index) {
                    t.strength = -t.strength;
                }
            }
        }
        scenario.modes = graph.vertices;
        scenario.coupling = coupling_from_graph(graph);
    } else if (kind == "custom") {
        config.expect_keys("coupling", {"matrix"});
        const Eigen::MatrixXd g = parse_matrix(config.get("coupling", "matrix"));
        if (g.rows() != g.cols()) {
            throw ConfigError(config.origin() + ": [coupling] matrix must be square");
        }
        if (!g.isApprox(g.transpose(), 0.0)) {
            throw ConfigError(config.origin() + ": [coupling] matrix must be symmetric");
        }
        scenario.mode_count = static_cast<int>(g.rows());
        scenario.coupling = CouplingMatrix(g);
        if (config.has_section("modes")) {
            scenario.modes = parse_mode_list(config);
            if (static_cast<int>(scenario.modes.size()) != scenario.mode_count) {
                throw ConfigError(config.origin() +
                                  ": [modes] list size differs from the coupling matrix");
            }
        }
    } else {
        throw ConfigError(config.origin() + ": unknown scenario kind '" + kind +
                          "'; expected one of h1, h2_chain, h3, hN, h3_experimental, "
                          "h4_experimental, vlb_transformed, singly_pumped, custom");
    }

    config.expect_keys("grid", {"start", "stop", "steps"});
    scenario.grid.start = config.get_double_or("grid", "start", 0.0);
    scenario.grid.stop = config.get_double_or("grid", "stop", 1.0);
    scenario.grid.points = config.get_int_or("grid", "steps", 101);
    if (!(scenario.grid.stop > scenario.grid.start) || scenario.grid.start < 0.0) {
        throw ConfigError(config.origin() + ": [grid] requires 0 <= start < stop");
    }
    if (scenario.grid.points < 2 || scenario.grid.points > 1000000) {
        throw ConfigError(config.origin() + ": [grid] steps must be in 2..1000000");
    }

    const int n = scenario.mode_count;
    if (config.get_bool_or("witness", "enabled", false)) {
        config.expect_keys("witness", {"enabled", "mode_i", "mode_j", "gains", "threshold"});
        if (n < 2) {
            throw ConfigError(config.origin() + ": witness requires at least two modes");
        }
        WitnessSpec witness;
        witness.mode_i = config.get_int_or("witness", "mode_i", 0);
        witness.mode_j = config.get_int_or("witness", "mode_j", n - 1);
        check_mode_index(config, witness.mode_i, n, "mode_i");
        check_mode_index(config, witness.mode_j, n, "mode_j");
        if (witness.mode_i == witness.mode_j) {
            throw ConfigError(config.origin() + ": [witness] mode_i equals mode_j");
        }
        witness.threshold = config.get_double_or("witness", "threshold", 1.0);
        if (config.has("witness", "gains")) {
            witness.gains = vector_key(config, "witness", "gains", n - 2);
        } else {
            witness.gains = Eigen::VectorXd::Ones(n - 2);
        }
        scenario.witness = witness;
    } else if (config.has_section("witness")) {
        config.expect_keys("witness", {"enabled"});
    }

    for (const std::string& section : config.sections()) {
        if (section.rfind("quadrature.", 0) != 0) continue;
        const std::string name = section.substr(std::string("quadrature.").size());
        if (name.empty()) {
            throw ConfigError(config.origin() + ": [quadrature.] needs a name suffix");
        }
        config.expect_keys(section, {"x", "p"});
        NamedQuadrature column;
        column.name = "var_" + name;
        column.quadrature.x = config.has(section, "x")
                                  ? vector_key(config, section, "x", n)
                                  : Eigen::VectorXd::Zero(n);
        column.quadrature.p = config.has(section, "p")
                                  ? vector_key(config, section, "p", n)
                                  : Eigen::VectorXd::Zero(n);
        if (column.quadrature.x.isZero(0.0) && column.quadrature.p.isZero(0.0)) {
            throw ConfigError(config.origin() + ": [" + section +
                              "] defines an all-zero quadrature");
        }
        scenario.extra_quadratures.push_back(std::move(column));
    }
    return scenario;
}

}  // namespace sqc
