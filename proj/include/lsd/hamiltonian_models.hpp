// hamiltonian_models.hpp - builders for the example systems (qubit, quartic
// oscillator, FRW minisuperspace, Schwarzschild-interior toy potential)
#pragma once

#include <cstddef>
#include <optional>

#include "lsd/eigensolver.hpp"
#include "lsd/spectral_core.hpp"

namespace lsd {

struct TwoLevelModel {
    double e1{0};
    double e2{0};
};

// H = p^2 + lambda x^4 (units with 2m = hbar = 1)
struct QuarticModel {
    double lambda{1};
    std::size_t levels_requested{1};
};

enum class FrwPotentialKind { harmonic, anharmonic };

// H = -d^2/da^2 + V(a), V(a) = stiffness (a - a0)^2 + quartic (a - a0)^4 + offset
struct FRWModel {
    FrwPotentialKind kind{FrwPotentialKind::harmonic};
    double stiffness{1};
    double quartic{0};
    double a0{0};
    double offset{0};
    double energy_shift{0};
    std::size_t levels_requested{1};

    [[nodiscard]] Potential potential() const;
};

// V(x) = -alpha / x^2 + beta1 x^2 on [epsilon_wall, x_max], Dirichlet at both ends.
// beta1 is the confining strength, unrelated to the deformation beta.
struct SchwarzschildInteriorModel {
    double alpha{0.1};
    double beta1{1};
    double epsilon_wall{1e-3};
    std::size_t levels_requested{1};

    [[nodiscard]] Potential potential() const;
};

struct PowerLawFit {
    double exponent{0};
    double kappa{0};
    std::size_t first_level{0};
    std::size_t points{0};
};

struct QuarticResult {
    Spectrum spectrum;
    std::optional<PowerLawFit> fit; // empty when fewer than two levels fall in the window
};

Spectrum build_two_level(const TwoLevelModel& model);

// Least-squares fit ln E_n = p ln n + ln kappa over the upper half of the
// levels, dropping the top 10%.
std::optional<PowerLawFit> fit_level_power_law(const Spectrum& spectrum);

QuarticResult build_quartic(const QuarticModel& model, const Grid1D& grid);
Spectrum build_frw(const FRWModel& model, const Grid1D& grid);
Spectrum build_schwarzschild_interior(const SchwarzschildInteriorModel& model, const Grid1D& grid);

// Default inner wall: 1e-3 of the oscillator length beta1^(-1/4).
double default_epsilon_wall(double beta1);

// Symmetric grid reaching 1.5x the WKB turning point of level n for lambda x^4.
Grid1D quartic_grid(double lambda, std::size_t levels, std::size_t n_points);

} // namespace lsd
