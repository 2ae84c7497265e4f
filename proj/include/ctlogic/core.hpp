#ifndef CTLOGIC_CORE_HPP
#define CTLOGIC_CORE_HPP

// Victim-net evaluation for crosstalk gates.
//
// A gate is a set of aggressor lines coupled to one floating victim line.
// Two models decide whether the victim's inverter flips:
//   * behavioral: integer threshold on the summed weights of rising aggressors
//   * analog:     lumped charge divider  V = vdd * sum(rising w*Cu) / (sum(all w*Cu) + Cpar)
// The behavioral model is exact; the analog one is checked against it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctlogic/errors.hpp"

namespace ctlogic {

/// Rising flag per aggressor: data inputs in order, then the control aggressor if any.
using DriveVector = std::vector<bool>;

inline constexpr double vacuum_permittivity = 8.854e-12;  // F/m
inline constexpr double analog_rel_tolerance = 1e-9;
inline constexpr double auto_parasitic_floor = 0.1;      // in units of unit_coupling
inline constexpr std::size_t max_enumerated_aggressors = 24;

struct AnalogParams {
    double vdd = 1.0;                     // volts
    double threshold_ratio = 0.35;        // inverter flips at threshold_ratio * vdd
    double unit_coupling_ff = 1.0;        // one weight unit, femtofarads
    std::optional<double> parasitic_ff;   // explicit per-gate parasitic; empty means AUTO

    void validate() const {
        if (!(vdd > 0.0)) throw parameter_error("vdd must be positive");
        if (!(threshold_ratio > 0.0 && threshold_ratio < 1.0))
            throw parameter_error("threshold_ratio must lie in (0, 1)");
        if (!(unit_coupling_ff > 0.0)) throw parameter_error("unit_coupling must be positive");
        if (parasitic_ff && !(*parasitic_ff >= 0.0))
            throw parameter_error("parasitic capacitance must be non-negative");
    }

    [[nodiscard]] double threshold_volts() const { return threshold_ratio * vdd; }
    [[nodiscard]] bool auto_parasitic() const { return !parasitic_ff.has_value(); }
};

/// Parallel-plate line pair. All lengths in nanometers.
struct GeometrySpec {
    double length_nm = 0.0;
    double thickness_nm = 0.0;
    double spacing_nm = 0.0;
    double rel_permittivity = 1.0;
};

struct MarginReport {
    double fire_min_voltage = 0.0;
    double nonfire_max_voltage = 0.0;
    double low_margin = 0.0;    // fire_min - threshold
    double high_margin = 0.0;   // threshold - nonfire_max
    bool feasible = false;      // both margins strictly positive
    double parasitic_ff = 0.0;  // the parasitic the report was computed with
};

namespace detail {

inline void check_weights(std::span<const int> weights) {
    if (weights.empty()) throw contract_error("gate has no aggressors");
    for (int w : weights)
        if (w <= 0) throw contract_error("coupling weights must be positive integers");
}

inline void check_drive(std::span<const int> weights, const DriveVector& drive) {
    if (drive.size() != weights.size())
        throw contract_error("drive vector has " + std::to_string(drive.size()) +
                             " entries, gate has " + std::to_string(weights.size()) + " aggressors");
}

inline long long weight_sum(std::span<const int> weights) {
    return std::accumulate(weights.begin(), weights.end(), 0LL);
}

inline long long rising_sum(std::span<const int> weights, const DriveVector& drive) {
    long long sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (drive[i]) sum += weights[i];
    return sum;
}

inline DriveVector drive_from_bits(std::uint64_t bits, std::size_t n) {
    DriveVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = ((bits >> i) & 1U) != 0;
    return d;
}

inline std::uint64_t enumeration_size(std::size_t n) {
    if (n > max_enumerated_aggressors)
        throw contract_error("too many aggressors to enumerate: " + std::to_string(n));
    return std::uint64_t{1} << n;
}

}  // namespace detail

/// Behavioral firing rule: the summed weight of rising aggressors reaches margin_k.
inline bool behavioral_fire(std::span<const int> weights, const DriveVector& drive, int margin_k) {
    detail::check_weights(weights);
    detail::check_drive(weights, drive);
    if (margin_k <= 0) throw contract_error("margin threshold must be positive");
    if (margin_k > detail::weight_sum(weights))
        throw unrealizable_gate("threshold " + std::to_string(margin_k) + " exceeds total coupling " +
                                std::to_string(detail::weight_sum(weights)));
    return detail::rising_sum(weights, drive) >= margin_k;
}

/// Parasitic (fF) attached to a gate's victim under the given parameters.
///
/// AUTO places the inverter threshold halfway between the largest non-firing
/// and the smallest firing weight sum: Cpar = max(0.1, (k - 0.5)/ratio - W) * Cu.
inline double parasitic_for(std::span<const int> weights, int margin_k, const AnalogParams& params) {
    params.validate();
    if (params.parasitic_ff) return *params.parasitic_ff;
    const double total = static_cast<double>(detail::weight_sum(weights));
    const double units = (static_cast<double>(margin_k) - 0.5) / params.threshold_ratio - total;
    return std::max(auto_parasitic_floor, units) * params.unit_coupling_ff;
}

inline double victim_voltage(std::span<const int> weights, const DriveVector& drive,
                             const AnalogParams& params, double parasitic_ff) {
    detail::check_weights(weights);
    detail::check_drive(weights, drive);
    params.validate();
    if (!(parasitic_ff >= 0.0)) throw parameter_error("parasitic capacitance must be non-negative");

    const double cu = params.unit_coupling_ff;
    const double injected = static_cast<double>(detail::rising_sum(weights, drive)) * cu;
    const double total = static_cast<double>(detail::weight_sum(weights)) * cu + parasitic_ff;
    if (injected == 0.0) return 0.0;
    if (injected == total) return params.vdd;
    return params.vdd * injected / total;
}

/// Analog firing rule; at-threshold voltages fire.
inline bool analog_fire(std::span<const int> weights, const DriveVector& drive,
                        const AnalogParams& params, double parasitic_ff) {
    const double v = victim_voltage(weights, drive, params, parasitic_ff);
    const double thr = params.threshold_volts();
    return v >= thr - analog_rel_tolerance * thr;
}

/// Parallel-plate estimate eps0 * epsr * (length * thickness) / spacing, in fF.
inline double coupling_from_geometry(const GeometrySpec& g) {
    if (!(g.spacing_nm > 0.0)) throw parameter_error("spacing must be positive");
    if (!(g.length_nm > 0.0) || !(g.thickness_nm > 0.0) || !(g.rel_permittivity > 0.0))
        throw parameter_error("geometry dimensions and permittivity must be positive");
    const double area_m2 = (g.length_nm * 1e-9) * (g.thickness_nm * 1e-9);
    const double farads = vacuum_permittivity * g.rel_permittivity * area_m2 / (g.spacing_nm * 1e-9);
    return farads * 1e15;
}

/// Sweeps every drive vector and measures how far the analog victim voltage
/// stays from the inverter threshold on each side of the behavioral decision.
inline MarginReport noise_margin(std::span<const int> weights, int margin_k, const AnalogParams& params) {
    detail::check_weights(weights);
    params.validate();
    const std::size_t n = weights.size();
    const std::uint64_t count = detail::enumeration_size(n);
    const double parasitic = parasitic_for(weights, margin_k, params);

    MarginReport report;
    report.parasitic_ff = parasitic;
    report.fire_min_voltage = std::numeric_limits<double>::infinity();
    report.nonfire_max_voltage = -std::numeric_limits<double>::infinity();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        const DriveVector drive = detail::drive_from_bits(bits, n);
        const double v = victim_voltage(weights, drive, params, parasitic);
        if (behavioral_fire(weights, drive, margin_k))
            report.fire_min_voltage = std::min(report.fire_min_voltage, v);
        else
            report.nonfire_max_voltage = std::max(report.nonfire_max_voltage, v);
    }
    // k >= 1 keeps the all-zero vector non-firing; k <= W keeps all-ones firing.
    const double thr = params.threshold_volts();
    report.low_margin = report.fire_min_voltage - thr;
    report.high_margin = thr - report.nonfire_max_voltage;
    report.feasible = report.low_margin > 0.0 && report.high_margin > 0.0;
    return report;
}

/// True iff the analog and behavioral models agree on every drive vector.
inline bool consistency_check(std::span<const int> weights, int margin_k, const AnalogParams& params) {
    detail::check_weights(weights);
    const std::size_t n = weights.size();
    const std::uint64_t count = detail::enumeration_size(n);
    const double parasitic = parasitic_for(weights, margin_k, params);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        const DriveVector drive = detail::drive_from_bits(bits, n);
        if (behavioral_fire(weights, drive, margin_k) != analog_fire(weights, drive, params, parasitic))
            return false;
    }
    return true;
}

}  // namespace ctlogic

#endif  // CTLOGIC_CORE_HPP
