#pragma once

#include <utility>
#include <vector>

#include "sqc/modes.hpp"
#include "sqc/sellmeier.hpp"

namespace sqc {

// A degenerate-downconversion / second-harmonic pair in a periodically poled
// crystal: pump at half the fundamental wavelength, signal and idler both at
// the fundamental, polarizations fixed by the tensor element.
struct QpmInteraction {
    ChiLabel tensor = ChiLabel::zzz;
    double fundamental_um = 1.064;  // signal/idler vacuum wavelength
    int order = 1;                  // grating order m >= 1, odd in practice
    double d_coeff = 1.0;           // nonlinear coefficient magnitude, pm/V
};

// Representative nonlinear coefficient for each tensor element, pm/V.
double representative_d_coefficient(ChiLabel label);

// Effective coefficient of the m-th grating order, (2 / (m pi)) * d.
double effective_coefficient(const QpmInteraction& q);

// Wavevector mismatch including the grating vector, rad/um:
//   k_pump(lambda/2) - k_signal(lambda) - k_idler(lambda) - 2 pi m / period.
double delta_k(const SellmeierSet& set, const QpmInteraction& q, double period_um,
               double temp_c);

// The period zeroing delta_k at this temperature, exactly linear in the
// grating order. Throws NoSolutionError when the bare mismatch is not
// positive (no forward grating can compensate).
double qpm_period(const SellmeierSet& set, const QpmInteraction& q, double temp_c);

struct TuningPeak {
    double temp_c = 0.0;
    int lobe = 0;       // signed sinc lobe index, 0 = main peak
    double value = 0.0; // power at the refined peak temperature
};

// Conversion efficiency versus temperature at a fixed period:
//   power(T) = (d_eff * L)^2 * sinc^2(delta_k(T) * L / 2).
// Peaks are grid local maxima refined parabolically.
struct TuningCurve {
    std::vector<double> temps_c;
    std::vector<double> power;
    std::vector<TuningPeak> peaks;
    double length_mm = 0.0;
    double period_um = 0.0;
};

TuningCurve shg_curve(const SellmeierSet& set, const QpmInteraction& q, double period_um,
                      double length_mm, std::pair<double, double> temp_range_c,
                      int steps);

// Ratio of main-peak powers, (d_eff(a) / d_eff(b))^2; lengths cancel.
double peak_ratio(const QpmInteraction& a, const QpmInteraction& b);

struct Concurrence {
    double period_um = 0.0;
    double temp_c = 0.0;  // midpoint of the two peak temperatures
    int lobe_a = 0;
    int lobe_b = 0;
    double efficiency = 0.0;  // product of the two curve powers at temp_c
};

struct ConcurrenceOptions {
    int lobe_depth = 0;            // 0 = main peaks only
    double length_mm = 10.0;
    double temp_tolerance_c = 0.5; // max peak separation to count as one point
    double period_step_um = 0.01;
    double temp_step_c = 0.05;
};

// Periods and temperatures where both interactions peak together: scans the
// period grid, tracks each (lobe, lobe) peak-temperature gap, and refines
// sign changes by bisection and interior minima by golden section. Results
// are sorted by efficiency, descending, and deterministic for fixed options.
std::vector<Concurrence> find_concurrences(const SellmeierSet& set,
                                           const QpmInteraction& a,
                                           const QpmInteraction& b,
                                           std::pair<double, double> period_range_um,
                                           std::pair<double, double> temp_range_c,
                                           const ConcurrenceOptions& options = {});

}  // namespace sqc
