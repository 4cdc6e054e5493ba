#pragma once

#include <iosfwd>
#include <string>

#include "sqc/modes.hpp"

namespace sqc {

class ConfigFile;

// Temperature all dispersion data is anchored to, in Celsius.
inline constexpr double kReferenceTemperatureC = 25.0;

// One crystal axis. The cold index follows
//   n^2(lambda) = a + b / (lambda^2 - c) - d * lambda^2
// with lambda in micrometers, anchored at 25 C, and the thermo-optic slope
//   dn/dT = t0 + t1 / lambda + t2 / lambda^2
// in 1/C is applied linearly in (T - 25). Validity bounds are part of the
// data; queries outside them are range errors, not extrapolations.
struct AxisDispersion {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double t0 = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double lambda_min_um = 0.0;
    double lambda_max_um = 0.0;
    double temp_min_c = 0.0;
    double temp_max_c = 0.0;
};

// Dispersion data for a biaxial-cut crystal driven along its y and z axes.
// Construction validates the bounds and spot-checks n > 1 across the
// validity rectangle, so a loaded set is safe to evaluate.
class SellmeierSet {
  public:
    SellmeierSet(std::string material, std::string citation, AxisDispersion y,
                 AxisDispersion z);

    static SellmeierSet load(std::istream& in, const std::string& origin = "<stream>");
    static SellmeierSet load_file(const std::string& path);
    static SellmeierSet from_config(const ConfigFile& config);

    const std::string& material() const { return material_; }
    const std::string& citation() const { return citation_; }
    const AxisDispersion& axis(Pol pol) const;

    // Index at the given vacuum wavelength (micrometers) and temperature
    // (Celsius). Throws std::range_error naming the violated bound.
    double refractive_index(Pol pol, double lambda_um, double temp_c) const;

  private:
    std::string material_;
    std::string citation_;
    AxisDispersion y_;
    AxisDispersion z_;
};

}  // namespace sqc
