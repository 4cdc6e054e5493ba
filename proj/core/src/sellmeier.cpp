#include "sqc/sellmeier.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sqc/config.hpp"
#include "sqc/errors.hpp"

namespace sqc {

namespace {

void validate_axis(const AxisDispersion& axis, const char* name) {
    const double values[] = {axis.a,  axis.b,  axis.c,  axis.d,
                             axis.t0, axis.t1, axis.t2, axis.lambda_min_um,
                             axis.lambda_max_um, axis.temp_min_c, axis.temp_max_c};
    for (const double v : values) {
        if (!std::isfinite(v)) {
            throw ConfigError(std::string("axis ") + name + " has a non-finite entry");
        }
    }
    if (!(axis.lambda_min_um > 0.0) || !(axis.lambda_max_um > axis.lambda_min_um)) {
        throw ConfigError(std::string("axis ") + name +
                          " needs 0 < lambda_min < lambda_max");
    }
    if (!(axis.temp_max_c > axis.temp_min_c)) {
        throw ConfigError(std::string("axis ") + name + " needs temp_min < temp_max");
    }
    if (axis.c >= axis.lambda_min_um * axis.lambda_min_um) {
        throw ConfigError(std::string("axis ") + name +
                          " has its pole inside the validity range");
    }
}

double cold_index_squared(const AxisDispersion& axis, double lambda_um) {
    const double l2 = lambda_um * lambda_um;
    return axis.a + axis.b / (l2 - axis.c) - axis.d * l2;
}

double thermo_optic_slope(const AxisDispersion& axis, double lambda_um) {
    return axis.t0 + axis.t1 / lambda_um + axis.t2 / (lambda_um * lambda_um);
}

double evaluate(const AxisDispersion& axis, double lambda_um, double temp_c) {
    const double n2 = cold_index_squared(axis, lambda_um);
    if (!(n2 > 0.0)) {
        std::ostringstream msg;
        msg << "dispersion form is nonpositive at lambda = " << lambda_um << " um";
        throw ConfigError(msg.str());
    }
    return std::sqrt(n2) +
           (temp_c - kReferenceTemperatureC) * thermo_optic_slope(axis, lambda_um);
}

void spot_check(const AxisDispersion& axis, const char* name) {
    const int kLambdaSamples = 13;
    const int kTempSamples = 7;
    for (int i = 0; i < kLambdaSamples; ++i) {
        const double lambda =
            axis.lambda_min_um + (axis.lambda_max_um - axis.lambda_min_um) * i /
                                     (kLambdaSamples - 1);
        for (int j = 0; j < kTempSamples; ++j) {
            const double temp =
                axis.temp_min_c + (axis.temp_max_c - axis.temp_min_c) * j /
                                      (kTempSamples - 1);
            const double n = evaluate(axis, lambda, temp);
            if (!(n > 1.0)) {
                std::ostringstream msg;
                msg << "axis " << name << " yields index " << n << " <= 1 at lambda = "
                    << lambda << " um, T = " << temp << " C";
                throw ConfigError(msg.str());
            }
        }
    }
}

AxisDispersion axis_from_config(const ConfigFile& config, const std::string& section) {
    config.expect_keys(section,
                       {"sell_a", "sell_b", "sell_c", "sell_d", "dndt_c0", "dndt_c1",
                        "dndt_c2", "lambda_min", "lambda_max", "temp_min", "temp_max"});
    AxisDispersion axis;
    axis.a = config.get_double(section, "sell_a");
    axis.b = config.get_double(section, "sell_b");
    axis.c = config.get_double(section, "sell_c");
    axis.d = config.get_double(section, "sell_d");
    axis.t0 = config.get_double(section, "dndt_c0");
    axis.t1 = config.get_double(section, "dndt_c1");
    axis.t2 = config.get_double(section, "dndt_c2");
    axis.lambda_min_um = config.get_double(section, "lambda_min");
    axis.lambda_max_um = config.get_double(section, "lambda_max");
    axis.temp_min_c = config.get_double(section, "temp_min");
    axis.temp_max_c = config.get_double(section, "temp_max");
    return axis;
}

}  // namespace

SellmeierSet::SellmeierSet(std::string material, std::string citation, AxisDispersion y,
                           AxisDispersion z)
    : material_(std::move(material)), citation_(std::move(citation)), y_(y), z_(z) {
    if (material_.empty()) throw ConfigError("dispersion set needs a material name");
    validate_axis(y_, "y");
    validate_axis(z_, "z");
    spot_check(y_, "y");
    spot_check(z_, "z");
}

SellmeierSet SellmeierSet::load(std::istream& in, const std::string& origin) {
    return from_config(ConfigFile::parse(in, origin));
}

SellmeierSet SellmeierSet::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open dispersion dataset '" + path + "'");
    return load(in, path);
}

SellmeierSet SellmeierSet::from_config(const ConfigFile& config) {
    config.expect_keys("material", {"name", "citation"});
    for (const std::string& section : config.sections()) {
        if (section != "material" && section != "axis.y" && section != "axis.z") {
            throw ConfigError(config.origin() + ": unexpected section [" + section +
                              "] in dispersion dataset");
        }
    }
    return SellmeierSet(config.get("material", "name"),
                        config.get_or("material", "citation", ""),
                        axis_from_config(config, "axis.y"),
                        axis_from_config(config, "axis.z"));
}

const AxisDispersion& SellmeierSet::axis(Pol pol) const {
    return pol == Pol::Y ? y_ : z_;
}

double SellmeierSet::refractive_index(Pol pol, double lambda_um, double temp_c) const {
    const AxisDispersion& ax = axis(pol);
    if (!std::isfinite(lambda_um) || lambda_um < ax.lambda_min_um ||
        lambda_um > ax.lambda_max_um) {
        std::ostringstream msg;
        msg << "wavelength " << lambda_um << " um outside the dataset's validity range ["
            << ax.lambda_min_um << ", " << ax.lambda_max_um << "] um";
        throw std::range_error(msg.str());
    }
    if (!std::isfinite(temp_c) || temp_c < ax.temp_min_c || temp_c > ax.temp_max_c) {
        std::ostringstream msg;
        msg << "temperature " << temp_c << " C outside the dataset's validity range ["
            << ax.temp_min_c << ", " << ax.temp_max_c << "] C";
        throw std::range_error(msg.str());
    }
    return evaluate(ax, lambda_um, temp_c);
}

}  // namespace sqc
