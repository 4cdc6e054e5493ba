#include "sqc/qpm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sqc/errors.hpp"

namespace sqc {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(x) / x;
}

void validate_interaction(const QpmInteraction& q) {
    if (!std::isfinite(q.fundamental_um) || q.fundamental_um <= 0.0) {
        throw std::invalid_argument("fundamental wavelength must be positive");
    }
    if (q.order < 1) throw std::invalid_argument("grating order must be >= 1");
    if (!std::isfinite(q.d_coeff) || q.d_coeff <= 0.0) {
        throw std::invalid_argument("nonlinear coefficient must be positive");
    }
}

// Collinear mismatch without the grating, rad/um. Positive in normally
// dispersive media, where the pump index exceeds the fundamental indices.
double bare_mismatch(const SellmeierSet& set, const QpmInteraction& q, double temp_c) {
    const double pump_um = q.fundamental_um / 2.0;
    const double n_pump = set.refractive_index(chi_pump_pol(q.tensor), pump_um, temp_c);
    const auto [pol_a, pol_b] = chi_signal_pols(q.tensor);
    const double n_a = set.refractive_index(pol_a, q.fundamental_um, temp_c);
    const double n_b = set.refractive_index(pol_b, q.fundamental_um, temp_c);
    return (2.0 * kPi / q.fundamental_um) * (2.0 * n_pump - n_a - n_b);
}

double curve_power(const SellmeierSet& set, const QpmInteraction& q, double period_um,
                   double length_mm, double temp_c) {
    const double x = delta_k(set, q, period_um, temp_c) * (length_mm * 1000.0) / 2.0;
    const double s = sinc(x);
    const double amplitude = effective_coefficient(q) * length_mm;
    return amplitude * amplitude * s * s;
}

int lobe_index(const SellmeierSet& set, const QpmInteraction& q, double period_um,
               double length_mm, double temp_c) {
    const double x = delta_k(set, q, period_um, temp_c) * (length_mm * 1000.0) / 2.0;
    const int magnitude = static_cast<int>(std::floor(std::abs(x) / kPi));
    return x < 0.0 ? -magnitude : magnitude;
}

}  // namespace

double representative_d_coefficient(ChiLabel label) {
    switch (label) {
        case ChiLabel::yzy: return 4.24;
        case ChiLabel::zzz: return 15.80;
        case ChiLabel::yyy: return 2.40;
        case ChiLabel::yzz: return 3.10;
        case ChiLabel::zyy: return 3.10;
    }
    throw std::invalid_argument("unknown tensor element");
}

double effective_coefficient(const QpmInteraction& q) {
    validate_interaction(q);
    return (2.0 / (q.order * kPi)) * q.d_coeff;
}

double delta_k(const SellmeierSet& set, const QpmInteraction& q, double period_um,
               double temp_c) {
    validate_interaction(q);
    if (!std::isfinite(period_um) || period_um <= 0.0) {
        throw std::invalid_argument("poling period must be positive");
    }
    return bare_mismatch(set, q, temp_c) - 2.0 * kPi * q.order / period_um;
}

double qpm_period(const SellmeierSet& set, const QpmInteraction& q, double temp_c) {
    validate_interaction(q);
    const double bare = bare_mismatch(set, q, temp_c);
    if (!(bare > 0.0)) {
        std::ostringstream msg;
        msg << "no forward poling period phase-matches " << to_string(q.tensor)
            << " at " << temp_c << " C (collinear mismatch " << bare << " rad/um)";
        throw NoSolutionError(msg.str());
    }
    // first-order period, scaled by the order so the m dependence is exact
    const double base = 2.0 * kPi / bare;
    return q.order * base;
}

TuningCurve shg_curve(const SellmeierSet& set, const QpmInteraction& q, double period_um,
                      double length_mm, std::pair<double, double> temp_range_c,
                      int steps) {
    validate_interaction(q);
    if (!std::isfinite(period_um) || period_um <= 0.0) {
        throw std::invalid_argument("poling period must be positive");
    }
    if (!std::isfinite(length_mm) || length_mm <= 0.0) {
        throw std::invalid_argument("crystal length must be positive");
    }
    if (!(temp_range_c.second > temp_range_c.first)) {
        throw std::invalid_argument("temperature range is empty");
    }
    if (steps < 3) throw std::invalid_argument("tuning curve needs at least 3 samples");

    TuningCurve curve;
    curve.length_mm = length_mm;
    curve.period_um = period_um;
    curve.temps_c.resize(static_cast<size_t>(steps));
    curve.power.resize(static_cast<size_t>(steps));
    const double step =
        (temp_range_c.second - temp_range_c.first) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i) {
        const double t = i + 1 == steps ? temp_range_c.second
                                        : temp_range_c.first + step * i;
        curve.temps_c[static_cast<size_t>(i)] = t;
        curve.power[static_cast<size_t>(i)] = curve_power(set, q, period_um, length_mm, t);
    }

    auto refine = [&](double center, double half_width) {
        // keep the stencil inside the sampled window
        const double lo = temp_range_c.first + half_width;
        const double hi = temp_range_c.second - half_width;
        if (!(lo < hi)) return center;
        center = std::clamp(center, lo, hi);
        const double left = curve_power(set, q, period_um, length_mm, center - half_width);
        const double mid = curve_power(set, q, period_um, length_mm, center);
        const double right = curve_power(set, q, period_um, length_mm, center + half_width);
        const double denom = left - 2.0 * mid + right;
        if (!(denom < 0.0)) return center;
        double shift = 0.5 * half_width * (left - right) / denom;
        shift = std::clamp(shift, -half_width, half_width);
        return center + shift;
    };
    for (int i = 1; i + 1 < steps; ++i) {
        const double prev = curve.power[static_cast<size_t>(i - 1)];
        const double here = curve.power[static_cast<size_t>(i)];
        const double next = curve.power[static_cast<size_t>(i + 1)];
        if (!(here > prev && here >= next)) continue;
        double t = refine(curve.temps_c[static_cast<size_t>(i)], step);
        t = refine(t, step / 16.0);
        t = std::clamp(t, temp_range_c.first, temp_range_c.second);
        TuningPeak peak;
        peak.temp_c = t;
        peak.value = curve_power(set, q, period_um, length_mm, t);
        peak.lobe = lobe_index(set, q, period_um, length_mm, t);
        curve.peaks.push_back(peak);
    }
    return curve;
}

double peak_ratio(const QpmInteraction& a, const QpmInteraction& b) {
    const double ratio = effective_coefficient(a) / effective_coefficient(b);
    return ratio * ratio;
}

namespace {

// Peak temperatures keyed by lobe index, restricted to |lobe| <= depth.
// When the mismatch is not monotone in temperature a lobe can peak twice;
// the stronger peak wins.
std::map<int, double> peak_map(const SellmeierSet& set, const QpmInteraction& q,
                               double period_um, std::pair<double, double> temp_range_c,
                               const ConcurrenceOptions& options) {
    const int steps = std::max(
        16, static_cast<int>(std::ceil((temp_range_c.second - temp_range_c.first) /
                                       options.temp_step_c)) +
                1);
    const TuningCurve curve =
        shg_curve(set, q, period_um, options.length_mm, temp_range_c, steps);
    std::map<int, double> peaks;
    std::map<int, double> values;
    for (const TuningPeak& p : curve.peaks) {
        if (std::abs(p.lobe) > options.lobe_depth) continue;
        const auto it = values.find(p.lobe);
        if (it == values.end() || p.value > it->second) {
            peaks[p.lobe] = p.temp_c;
            values[p.lobe] = p.value;
        }
    }
    return peaks;
}

}  // namespace

std::vector<Concurrence> find_concurrences(const SellmeierSet& set,
                                           const QpmInteraction& a,
                                           const QpmInteraction& b,
                                           std::pair<double, double> period_range_um,
                                           std::pair<double, double> temp_range_c,
                                           const ConcurrenceOptions& options) {
    validate_interaction(a);
    validate_interaction(b);
    if (!(period_range_um.first > 0.0) ||
        !(period_range_um.second > period_range_um.first)) {
        throw std::invalid_argument("period range must satisfy 0 < min < max");
    }
    if (!(temp_range_c.second > temp_range_c.first)) {
        throw std::invalid_argument("temperature range is empty");
    }
    if (options.lobe_depth < 0) throw std::invalid_argument("lobe depth must be >= 0");
    if (!(options.period_step_um > 0.0) || !(options.temp_step_c > 0.0) ||
        !(options.length_mm > 0.0) || !(options.temp_tolerance_c > 0.0)) {
        throw std::invalid_argument("search steps, length, and tolerance must be positive");
    }

    std::vector<double> periods;
    const int period_count =
        static_cast<int>(std::floor((period_range_um.second - period_range_um.first) /
                                    options.period_step_um)) +
        1;
    if (period_count > 2000000) {
        throw std::range_error("period grid exceeds 2e6 points; coarsen period_step_um");
    }
    for (int i = 0; i < period_count; ++i) {
        periods.push_back(period_range_um.first + options.period_step_um * i);
    }
    if (periods.back() < period_range_um.second - 1e-12) {
        periods.push_back(period_range_um.second);
    }

    std::vector<std::map<int, double>> peaks_a;
    std::vector<std::map<int, double>> peaks_b;
    peaks_a.reserve(periods.size());
    peaks_b.reserve(periods.size());
    for (const double period : periods) {
        peaks_a.push_back(peak_map(set, a, period, temp_range_c, options));
        peaks_b.push_back(peak_map(set, b, period, temp_range_c, options));
    }

    // Gap between the two tracked peak temperatures at one period; NaN when
    // either lobe has left the temperature window.
    auto gap_at = [&](double period, int lobe_a, int lobe_b) {
        const std::map<int, double> pa = peak_map(set, a, period, temp_range_c, options);
        const std::map<int, double> pb = peak_map(set, b, period, temp_range_c, options);
        const auto ia = pa.find(lobe_a);
        const auto ib = pb.find(lobe_b);
        if (ia == pa.end() || ib == pb.end()) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return ia->second - ib->second;
    };
    auto temps_at = [&](double period, int lobe_a, int lobe_b) {
        const std::map<int, double> pa = peak_map(set, a, period, temp_range_c, options);
        const std::map<int, double> pb = peak_map(set, b, period, temp_range_c, options);
        return std::pair<double, double>(pa.at(lobe_a), pb.at(lobe_b));
    };

    struct Hit {
        double period;
        double gap;
        int lobe_a;
        int lobe_b;
    };
    std::vector<Hit> hits;
    auto note_hit = [&](double period, double gap, int la, int lb) {
        if (!std::isfinite(gap) || std::abs(gap) > options.temp_tolerance_c) return;
        for (Hit& h : hits) {
            if (h.lobe_a == la && h.lobe_b == lb &&
                std::abs(h.period - period) < 2.0 * options.period_step_um) {
                if (std::abs(gap) < std::abs(h.gap)) {
                    h.period = period;
                    h.gap = gap;
                }
                return;
            }
        }
        hits.push_back({period, gap, la, lb});
    };

    for (size_t i = 0; i + 1 < periods.size(); ++i) {
        for (const auto& [la, ta0] : peaks_a[i]) {
            for (const auto& [lb, tb0] : peaks_b[i]) {
                const auto na = peaks_a[i + 1].find(la);
                const auto nb = peaks_b[i + 1].find(lb);
                const double g0 = ta0 - tb0;
                if (na == peaks_a[i + 1].end() || nb == peaks_b[i + 1].end()) {
                    note_hit(periods[i], g0, la, lb);
                    continue;
                }
                const double g1 = na->second - nb->second;
                if (g0 == 0.0) {
                    note_hit(periods[i], 0.0, la, lb);
                    continue;
                }
                if (g0 * g1 < 0.0) {
                    double lo = periods[i];
                    double hi = periods[i + 1];
                    double glo = g0;
                    for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        const double gm = gap_at(mid, la, lb);
                        if (!std::isfinite(gm)) break;
                        if (gm == 0.0) {
                            lo = hi = mid;
                            break;
                        }
                        if ((gm > 0.0) == (glo > 0.0)) {
                            lo = mid;
                            glo = gm;
                        } else {
                            hi = mid;
                        }
                    }
                    const double period = 0.5 * (lo + hi);
                    note_hit(period, gap_at(period, la, lb), la, lb);
                } else if (std::abs(g1) < std::abs(g0) && i + 2 == periods.size()) {
                    note_hit(periods[i + 1], g1, la, lb);
                } else if (i > 0) {
                    const auto pa = peaks_a[i - 1].find(la);
                    const auto pb = peaks_b[i - 1].find(lb);
                    if (pa == peaks_a[i - 1].end() || pb == peaks_b[i - 1].end()) {
                        note_hit(periods[i], g0, la, lb);
                        continue;
                    }
                    const double gm1 = pa->second - pb->second;
                    if (std::abs(g0) <= std::abs(gm1) && std::abs(g0) <= std::abs(g1)) {
                        // interior minimum without a sign change: golden search
                        double lo = periods[i - 1];
                        double hi = periods[i + 1];
                        const double phi = 0.6180339887498949;
                        double x1 = hi - phi * (hi - lo);
                        double x2 = lo + phi * (hi - lo);
                        double f1 = std::abs(gap_at(x1, la, lb));
                        double f2 = std::abs(gap_at(x2, la, lb));
                        for (int it = 0; it < 50 && hi - lo > 1e-9; ++it) {
                            if (!std::isfinite(f1) || !std::isfinite(f2)) break;
                            if (f1 < f2) {
                                hi = x2;
                                x2 = x1;
                                f2 = f1;
                                x1 = hi - phi * (hi - lo);
                                f1 = std::abs(gap_at(x1, la, lb));
                            } else {
                                lo = x1;
                                x1 = x2;
                                f1 = f2;
                                x2 = lo + phi * (hi - lo);
                                f2 = std::abs(gap_at(x2, la, lb));
                            }
                        }
                        const double period = 0.5 * (lo + hi);
                        note_hit(period, gap_at(period, la, lb), la, lb);
                    }
                } else {
                    note_hit(periods[i], g0, la, lb);
                }
            }
        }
    }

    std::vector<Concurrence> results;
    for (const Hit& hit : hits) {
        const auto [ta, tb] = temps_at(hit.period, hit.lobe_a, hit.lobe_b);
        Concurrence c;
        c.period_um = hit.period;
        c.temp_c = 0.5 * (ta + tb);
        c.lobe_a = hit.lobe_a;
        c.lobe_b = hit.lobe_b;
        c.efficiency = curve_power(set, a, hit.period, options.length_mm, c.temp_c) *
                       curve_power(set, b, hit.period, options.length_mm, c.temp_c);
        results.push_back(c);
    }
    std::sort(results.begin(), results.end(), [](const Concurrence& x, const Concurrence& y) {
        if (x.efficiency != y.efficiency) return x.efficiency > y.efficiency;
        if (x.period_um != y.period_um) return x.period_um < y.period_um;
        if (x.lobe_a != y.lobe_a) return x.lobe_a < y.lobe_a;
        return x.lobe_b < y.lobe_b;
    });
    return results;
}

}  // namespace sqc
