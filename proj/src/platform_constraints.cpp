#include "lsd/platform_constraints.hpp"

#include <cmath>
#include <numbers>

#include "lsd/errors.hpp"
#include "lsd/spectral_core.hpp"

namespace lsd {

int decade_of(double value) {
    if (!(value > 0.0))
        throw ValidationError("decade_of: value must be > 0");
    return static_cast<int>(std::lround(std::log10(value)));
}

double hz_to_angular(double hz) { return 2.0 * std::numbers::pi * hz; }

void validate(const PlatformSpec& spec) {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(spec.energy) || !positive(spec.delta_e) || !positive(spec.t2) || !positive(spec.e_star))
        throw ValidationError("platform '" + spec.name + "': E, delta_E, T2 and e_star must be > 0");
    if (spec.delta_e > spec.energy)
        throw ValidationError("platform '" + spec.name + "': delta_E must not exceed E");
    if (spec.log_factor_override && !positive(*spec.log_factor_override))
        throw ValidationError("platform '" + spec.name + "': log_factor_override must be > 0");
}

GDifference g_difference_approx(const PlatformSpec& spec) {
    validate(spec);
    GDifference out;
    out.log_factor = spec.log_factor_override ? *spec.log_factor_override
                                              : std::abs(std::log(spec.energy / spec.e_star) + 1.0);
    out.value = spec.delta_e * out.log_factor;
    out.degenerate = out.value == 0.0;
    return out;
}

double g_difference_exact(const PlatformSpec& spec) {
    validate(spec);
    const DeformationParams params(1.0, spec.e_star);
    const double upper = spec.energy + 0.5 * spec.delta_e;
    const double lower = spec.energy - 0.5 * spec.delta_e;
    return std::abs(g_function(upper, params) - g_function(lower, params));
}

BoundResult beta_bound(const PlatformSpec& spec) {
    const auto diff = g_difference_approx(spec);
    if (diff.degenerate)
        throw ValidationError("platform '" + spec.name +
                              "': log factor |ln(E/E*) + 1| vanishes; set log_factor_override");
    BoundResult out;
    out.name = spec.name;
    out.g_difference = diff.value;
    out.log_factor = diff.log_factor;
    out.beta_max = 1.0 / (spec.t2 * diff.value);
    const double exact = g_difference_exact(spec);
    out.beta_max_exact = exact > 0.0 ? 1.0 / (spec.t2 * exact) : 0.0;
    out.decade = decade_of(out.beta_max);
    if (spec.expected_band)
        out.band_match = spec.expected_band->contains(out.decade);
    out.spec = spec;
    return out;
}

double ramsey_bound(double delta_omega_precision, double e0, double e1, double e_star) {
    if (!(delta_omega_precision > 0.0))
        throw ValidationError("ramsey_bound: frequency precision must be > 0");
    const DeformationParams params(1.0, e_star);
    const double gap = std::abs(g_function(e1, params) - g_function(e0, params));
    if (gap == 0.0)
        throw ValidationError("ramsey_bound: degenerate pair, G(E1) = G(E0)");
    return delta_omega_precision / gap;
}

TableReport table_report(const std::vector<PlatformSpec>& specs) {
    TableReport report;
    for (const auto& spec : specs) {
        try {
            report.results.push_back(beta_bound(spec));
        } catch (const std::exception& e) {
            report.errors.push_back({spec.name, e.what()});
        }
    }
    return report;
}

std::vector<PlatformSpec> default_platforms() {
    const double e_star = hz_to_angular(1e9);
    return {
        {"superconducting_qubits", hz_to_angular(5e9), 1e8, 1e-4, e_star, 20.0, DecadeBand{-5, -5}},
        {"trapped_ions", hz_to_angular(1e15), hz_to_angular(3e5), 1.0, e_star, std::nullopt, DecadeBand{-8, -7}},
        {"nv_centers", hz_to_angular(3e9), hz_to_angular(1e8), 3e-3, e_star, std::nullopt, DecadeBand{-7, -6}},
        {"cold_atoms", hz_to_angular(3e4), hz_to_angular(2e3), 3.0, e_star, std::nullopt, DecadeBand{-6, -5}},
    };
}

} // namespace lsd
