// decoherence_analysis.hpp - decoherence rates and timescales, envelope model
// C_meas(t) = C_std(t) exp(-Gamma t), and residual-envelope fitting.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include <Eigen/Core>

#include "lsd/evolution.hpp"
#include "lsd/spectral_core.hpp"

namespace lsd {

enum class EnvelopeKind { exponential, gaussian };

// Calibrated environmental envelope: exp(-t/T2) or exp(-(t/T2)^2).
struct EnvelopeModel {
    EnvelopeKind kind{EnvelopeKind::exponential};
    double t2{1};

    EnvelopeModel() = default;
    EnvelopeModel(EnvelopeKind kind_, double t2_);

    [[nodiscard]] double operator()(double t) const;
};

struct CoherenceTrace {
    Eigen::VectorXd t;
    Eigen::VectorXd coherence;
};

struct EnvelopeFitResult {
    double gamma_fit{0};       // clamped to >= 0
    double gamma_raw{0};
    bool clamped{false};
    double gamma_stderr{0};
    double beta_inferred{0};
    double beta_stderr{0};
    double residual_norm{0};
    std::size_t points_used{0};
    bool significant{false};   // gamma_raw > 2 stderr
    double gamma_upper{0};     // max(gamma_raw, 0) + 2 stderr
    double beta_upper{0};
};

// |beta| |G(E_m) - G(E_n)|
double decoherence_rate(double e_m, double e_n, const DeformationParams& params);

// 1 / rate; empty when the rate is zero (infinite timescale).
std::optional<double> decoherence_time(double e_m, double e_n, const DeformationParams& params);

// C_std(t) exp(-gamma t) (1 + a u), u ~ U(-1, 1) from a seeded mt19937_64.
CoherenceTrace synthesize_trace(const EnvelopeModel& envelope, double gamma, const Eigen::VectorXd& t_grid,
                                double noise_amplitude = 0.0, std::uint64_t seed = 0);

// Points at or below this fraction of the first sample are dropped from the fit.
inline constexpr double fit_floor_fraction = 1e-3;

// Time range over which the exponential envelope is trusted; left to the experimenter.
struct FitWindow {
    double t_min{0};
    double t_max{std::numeric_limits<double>::infinity()};
};

EnvelopeFitResult fit_residual_envelope(const CoherenceTrace& trace, const EnvelopeModel& envelope, double e_m,
                                        double e_n, double e_star, const FitWindow& window = {});

// Boxcar average of rho_mn over [t_center - window/2, t_center + window/2]:
// rho_mn(t_center) sinc(omega_eff window / 2).
std::complex<double> windowed_coherence(const StateVector& state0, std::size_t m, std::size_t n,
                                        const DeformationParams& params, double t_center, double window);

} // namespace lsd
