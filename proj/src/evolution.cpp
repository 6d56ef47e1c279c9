#include "lsd/evolution.hpp"

#include <cmath>
#include <numbers>

namespace lsd {

StateVector::StateVector(Spectrum spectrum, Eigen::VectorXcd amplitudes)
    : spectrum_(std::move(spectrum)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != spectrum_.size())
        throw ValidationError("state vector: amplitude count " + std::to_string(amplitudes_.size()) +
                              " does not match spectrum size " + std::to_string(spectrum_.size()));
    if (!amplitudes_.allFinite())
        throw ValidationError("state vector: amplitudes must be finite");
    const double deviation = std::abs(amplitudes_.squaredNorm() - 1.0);
    if (deviation > norm_tolerance)
        throw ValidationError("state vector: squared norm deviates from 1 by " + std::to_string(deviation));
}

StateVector StateVector::normalized(Spectrum spectrum, Eigen::VectorXcd amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw ValidationError("state vector: amplitudes must be finite and not all zero");
    amplitudes /= norm;
    return {std::move(spectrum), std::move(amplitudes)};
}

std::complex<double> unit_phase(double angle) {
    if (std::abs(angle) > phase_reduction_threshold)
        angle = std::remainder(angle, 2.0 * std::numbers::pi);
    return std::polar(1.0, -angle);
}

StateVector evolve(const StateVector& state, double t, const DeformationParams& params) {
    Eigen::VectorXcd out(state.amplitudes().size());
    const auto& levels = state.spectrum().energies();
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out(i) = state.amplitudes()(i) * unit_phase(t * deformed_energy(levels(i), params));
    return {state.spectrum(), std::move(out)};
}

double frequency_shift(double e_m, double e_n, const DeformationParams& params) {
    return params.beta * (g_function(e_m, params) - g_function(e_n, params));
}

double effective_frequency(double e_m, double e_n, const DeformationParams& params) {
    return (e_m - e_n) + frequency_shift(e_m, e_n, params);
}

CoherenceSample off_diagonal(const StateVector& state0, std::size_t m, std::size_t n, double t,
                             const DeformationParams& params) {
    if (m == n)
        throw ValidationError("off_diagonal: m = n is a population, not a coherence");
    if (m >= state0.size() || n >= state0.size())
        throw ValidationError("off_diagonal: level index out of range");
    const double e_m = state0.spectrum().energy(m);
    const double e_n = state0.spectrum().energy(n);
    const double omega = effective_frequency(e_m, e_n, params);
    const auto& c = state0.amplitudes();
    const auto mi = static_cast<Eigen::Index>(m), ni = static_cast<Eigen::Index>(n);
    return {t, c(mi) * std::conj(c(ni)) * unit_phase(t * omega), omega};
}

} // namespace lsd
