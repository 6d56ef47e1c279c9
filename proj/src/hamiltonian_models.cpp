#include "lsd/hamiltonian_models.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/QR>

namespace lsd {

Spectrum build_two_level(const TwoLevelModel& model) {
    for (double e : {model.e1, model.e2})
        if (!std::isfinite(e) || !(e > 0.0))
            throw ValidationError("two-level model: energies must be finite and > 0");
    if (model.e1 == model.e2)
        throw ValidationError("two-level model: degenerate levels E1 = E2");
    Eigen::VectorXd levels(2);
    levels << std::min(model.e1, model.e2), std::max(model.e1, model.e2);
    return Spectrum(std::move(levels));
}

std::optional<PowerLawFit> fit_level_power_law(const Spectrum& spectrum) {
    const std::size_t k = spectrum.size();
    const std::size_t first = std::max<std::size_t>(k / 2, 1);
    const std::size_t last = k - k / 10; // exclusive
    if (last <= first || last - first < 2)
        return std::nullopt;

    const auto m = static_cast<Eigen::Index>(last - first);
    Eigen::MatrixXd design(m, 2);
    Eigen::VectorXd rhs(m);
    for (Eigen::Index r = 0; r < m; ++r) {
        const std::size_t level = first + static_cast<std::size_t>(r);
        design(r, 0) = std::log(static_cast<double>(spectrum.indices()[level]));
        design(r, 1) = 1.0;
        rhs(r) = std::log(spectrum.energy(level));
    }
    const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
    return PowerLawFit{coef(0), std::exp(coef(1)), first, last - first};
}

Grid1D quartic_grid(double lambda, std::size_t levels, std::size_t n_points) {
    // WKB: 2 int sqrt(E - lambda x^4) dx = pi (n + 1/2), top level n = levels - 1
    const double area = std::tgamma(0.25) * std::tgamma(1.5) / (4.0 * std::tgamma(1.75));
    const double n = static_cast<double>(levels) - 0.5;
    const double energy = std::cbrt(lambda) * std::pow(std::numbers::pi * n / (2.0 * area), 4.0 / 3.0);
    const double turning = std::pow(energy / lambda, 0.25);
    return {-1.5 * turning, 1.5 * turning, n_points};
}

QuarticResult build_quartic(const QuarticModel& model, const Grid1D& grid) {
    if (!(model.lambda > 0.0) || !std::isfinite(model.lambda))
        throw ValidationError("quartic model: lambda must be > 0");
    if (model.levels_requested < 1)
        throw ValidationError("quartic model: levels_requested must be >= 1");
    const double lambda = model.lambda;
    auto spectrum = solve_spectrum([lambda](double x) { return lambda * x * x * x * x; }, grid,
                                   model.levels_requested);

    const double top = spectrum.energy(spectrum.size() - 1);
    const double turning = std::pow(top / lambda, 0.25);
    const double reach = std::min(std::abs(grid.x_min), std::abs(grid.x_max));
    if (turning > 0.75 * reach) {
        std::ostringstream msg;
        msg << "quartic model: grid too small, turning point " << turning << " of level "
            << model.levels_requested - 1 << " exceeds 0.75 * " << reach;
        throw NumericalError(msg.str());
    }
    auto fit = fit_level_power_law(spectrum);
    return {std::move(spectrum), fit};
}

Potential FRWModel::potential() const {
    const double k = stiffness, g = quartic, center = a0, v0 = offset;
    if (kind == FrwPotentialKind::harmonic)
        return [k, center, v0](double a) { return k * (a - center) * (a - center) + v0; };
    return [k, g, center, v0](double a) {
        const double d2 = (a - center) * (a - center);
        return k * d2 + g * d2 * d2 + v0;
    };
}

Spectrum build_frw(const FRWModel& model, const Grid1D& grid) {
    if (model.stiffness < 0.0 || model.quartic < 0.0)
        throw ValidationError("FRW model: stiffness and quartic must be >= 0 (potential bounded below)");
    const bool confining = model.stiffness > 0.0 ||
                           (model.kind == FrwPotentialKind::anharmonic && model.quartic > 0.0);
    if (!confining)
        throw ValidationError("FRW model: potential must confine (stiffness > 0 or quartic > 0)");
    if (model.levels_requested < 1)
        throw ValidationError("FRW model: levels_requested must be >= 1");
    return solve_spectrum(model.potential(), grid, model.levels_requested, model.energy_shift);
}

Potential SchwarzschildInteriorModel::potential() const {
    const double a = alpha, b = beta1;
    return [a, b](double x) { return -a / (x * x) + b * x * x; };
}

double default_epsilon_wall(double beta1) { return 1e-3 * std::pow(beta1, -0.25); }

Spectrum build_schwarzschild_interior(const SchwarzschildInteriorModel& model, const Grid1D& grid) {
    if (!(model.alpha > 0.0 && model.alpha < 0.25))
        throw ValidationError(
            "Schwarzschild-interior model: alpha must lie in (0, 1/4); stronger inverse-square "
            "attraction has no unique self-adjoint Hamiltonian (fall to the center)");
    if (!(model.beta1 > 0.0))
        throw ValidationError("Schwarzschild-interior model: beta1 must be > 0");
    if (!(model.epsilon_wall > 0.0))
        throw ValidationError("Schwarzschild-interior model: epsilon_wall must be > 0");
    if (std::abs(grid.x_min - model.epsilon_wall) > 1e-12 * std::max(1.0, model.epsilon_wall))
        throw ValidationError("Schwarzschild-interior model: grid.x_min must equal epsilon_wall");
    if (model.levels_requested < 1)
        throw ValidationError("Schwarzschild-interior model: levels_requested must be >= 1");
    return solve_spectrum(model.potential(), grid, model.levels_requested);
}

} // namespace lsd
