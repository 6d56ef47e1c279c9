// evolution.hpp - exact diagonal evolution under exp(-i t F(H)) and pairwise coherences
#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Core>

#include "lsd/spectral_core.hpp"

namespace lsd {

// Pure state sum_n c_n |E_n>, normalized to 1 within 1e-12.
class StateVector {
public:
    StateVector(Spectrum spectrum, Eigen::VectorXcd amplitudes);

    // Rescales the amplitudes to unit norm before validating.
    static StateVector normalized(Spectrum spectrum, Eigen::VectorXcd amplitudes);

    [[nodiscard]] const Spectrum& spectrum() const { return spectrum_; }
    [[nodiscard]] const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    [[nodiscard]] std::size_t size() const { return spectrum_.size(); }
    [[nodiscard]] double norm_squared() const { return amplitudes_.squaredNorm(); }

    static constexpr double norm_tolerance = 1e-12;

private:
    Spectrum spectrum_;
    Eigen::VectorXcd amplitudes_;
};

struct CoherenceSample {
    double t{0};
    std::complex<double> rho_mn{};
    double effective_frequency{0};
};

// Phase angles beyond this magnitude are reduced modulo 2 pi before exponentiation.
inline constexpr double phase_reduction_threshold = 1e8;

// exp(-i angle) with the large-angle reduction applied.
std::complex<double> unit_phase(double angle);

StateVector evolve(const StateVector& state, double t, const DeformationParams& params);

// (E_m - E_n) + beta (G(E_m) - G(E_n))
double effective_frequency(double e_m, double e_n, const DeformationParams& params);

// beta (G(E_m) - G(E_n))
double frequency_shift(double e_m, double e_n, const DeformationParams& params);

// rho_mn(t) = c_m c_n^* exp(-i t omega_eff); m, n are positions in the spectrum.
CoherenceSample off_diagonal(const StateVector& state0, std::size_t m, std::size_t n, double t,
                             const DeformationParams& params);

} // namespace lsd
