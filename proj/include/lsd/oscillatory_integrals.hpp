// oscillatory_integrals.hpp - I(t) = int f(E) exp(-i t F(E)) dE over a compactly
// supported window, and numerical checks of its O(1/|beta|) suppression.
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "lsd/spectral_core.hpp"

namespace lsd {

enum class WindowKind { smooth_bump, raised_cosine };

// f(E) = amplitude * w(u), u = (2E - E_min - E_max) / (E_max - E_min) in [-1, 1].
//   smooth_bump:   w(u) = exp(-1 / (1 - u^2))
//   raised_cosine: w(u) = (1 + cos(pi u)) / 2
// Both vanish with their first derivative at the support ends.
class WindowProfile {
public:
    WindowProfile(WindowKind kind, double e_min, double e_max, double amplitude = 1.0);

    [[nodiscard]] WindowKind kind() const { return kind_; }
    [[nodiscard]] double e_min() const { return e_min_; }
    [[nodiscard]] double e_max() const { return e_max_; }
    [[nodiscard]] double width() const { return e_max_ - e_min_; }
    [[nodiscard]] double amplitude() const { return amplitude_; }

    [[nodiscard]] double operator()(double energy) const;
    [[nodiscard]] double derivative(double energy) const;

    // ||f||_inf, ||f'||_inf and int f dE, all closed form.
    [[nodiscard]] double sup_norm() const;
    [[nodiscard]] double derivative_sup_norm() const;
    [[nodiscard]] double integral() const;

private:
    WindowKind kind_;
    double e_min_;
    double e_max_;
    double amplitude_;
};

struct IntegralResult {
    std::complex<double> value{};
    double error_estimate{0};
    std::size_t panels{0};
    std::size_t nodes{0};
};

struct IntegrationOptions {
    double relative_tolerance{1e-10}; // relative to int |f| dE
    std::size_t node_budget{50'000'000};
};

// Adaptive Gauss-Legendre panels no wider than one local phase wavelength
// 2 pi / |Phi'(E)| (16 nodes per oscillation at least), refined by bisection
// until the error estimate meets the tolerance. Throws NumericalError when the
// node budget runs out.
IntegralResult integrate(const WindowProfile& profile, const PhaseContext& ctx,
                         const IntegrationOptions& options = {});

struct SlopeBound {
    // c with |Phi'(E)| >= c |t| |beta| on the support; 0 when the hypothesis fails
    double c{0};
    bool hypothesis_ok{false};
    // min over the support of |Phi'(E)|
    double min_phase_derivative{0};
};

SlopeBound phase_slope_bound(const WindowProfile& profile, const PhaseContext& ctx);

// (||f|| + ||f'|| (E_max - E_min)) / (c |t|)
double integration_by_parts_constant(const WindowProfile& profile, double c, double t);

struct DecayPoint {
    double beta{0};
    std::complex<double> value{};
    double magnitude{0};
    double c{0};
    double error_estimate{0};
};

struct DecayFit {
    std::vector<DecayPoint> points;      // included grid points, ascending beta
    std::vector<double> excluded_betas;  // stationary point inside (or within margin of) the support
    std::optional<double> slope;         // d ln|I| / d ln beta, when >= 2 usable points
    double c_fit{0};                     // max beta |I|
    double c_bound{0};                   // min c over the included points
    double bound_constant{0};            // integration_by_parts_constant at c_bound
    double beta0{0};                     // smallest included beta
};

// Stationary points closer than this fraction of the support width count as inside.
inline constexpr double stationary_margin_fraction = 0.05;

// beta_grid: strictly increasing positive values.
DecayFit decay_scan(const WindowProfile& profile, double t, double e_star,
                    const std::vector<double>& beta_grid, const IntegrationOptions& options = {});

// Least-squares slope of y against x.
double least_squares_slope(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

} // namespace lsd
