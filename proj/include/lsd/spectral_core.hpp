// spectral_core.hpp - logarithmic spectral deformation F(E) = E (1 + beta ln(E/E*))
//
// Scalar math for the deformation, its phase and phase derivative. All
// energies are angular frequencies (s^-1, hbar = 1); "log" is the natural log.
#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lsd/errors.hpp"

namespace lsd {

template <typename Scalar>
struct BasicDeformationParams {
    Scalar beta{0};
    Scalar e_star{1};

    BasicDeformationParams() = default;
    BasicDeformationParams(Scalar beta_, Scalar e_star_) : beta(beta_), e_star(e_star_) {
        using std::isfinite;
        if (!isfinite(beta))
            throw ValidationError("deformation beta must be finite");
        if (!(e_star > Scalar(0)) || !isfinite(e_star))
            throw ValidationError("deformation e_star must be finite and > 0");
    }
};
using DeformationParams = BasicDeformationParams<double>;

template <typename Scalar>
struct BasicPhaseContext {
    Scalar t{0};
    BasicDeformationParams<Scalar> params;

    BasicPhaseContext() = default;
    BasicPhaseContext(Scalar t_, BasicDeformationParams<Scalar> p) : t(t_), params(p) {
        using std::isfinite;
        if (!isfinite(t))
            throw ValidationError("phase context time must be finite");
    }
};
using PhaseContext = BasicPhaseContext<double>;

// Ordered, strictly positive discrete energy levels.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(Eigen::VectorXd energies);
    Spectrum(std::vector<std::size_t> indices, Eigen::VectorXd energies);

    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(energies_.size()); }
    [[nodiscard]] bool empty() const { return energies_.size() == 0; }
    [[nodiscard]] const Eigen::VectorXd& energies() const { return energies_; }
    [[nodiscard]] double energy(std::size_t i) const { return energies_(static_cast<Eigen::Index>(i)); }
    [[nodiscard]] const std::vector<std::size_t>& indices() const { return indices_; }

    bool operator==(const Spectrum&) const = default;

private:
    void validate() const;

    std::vector<std::size_t> indices_;
    Eigen::VectorXd energies_;
};

namespace detail {
template <typename Scalar>
inline void require_positive_energy(Scalar energy) {
    if (!(energy > Scalar(0)))
        throw ValidationError("energy must be > 0 (log(E/E*) undefined), got " +
                              std::to_string(static_cast<double>(energy)));
}
} // namespace detail

// G(E) = E ln(E/E*)
template <typename Scalar>
Scalar g_function(Scalar energy, const BasicDeformationParams<Scalar>& params) {
    using std::log;
    detail::require_positive_energy(energy);
    return energy * log(energy / params.e_star);
}

// F(E) = E + beta G(E)
template <typename Scalar>
Scalar deformed_energy(Scalar energy, const BasicDeformationParams<Scalar>& params) {
    return energy + params.beta * g_function(energy, params);
}

template <typename Scalar>
Scalar phase(Scalar energy, const BasicPhaseContext<Scalar>& ctx) {
    return ctx.t * deformed_energy(energy, ctx.params);
}

// d/dE of t F(E) = t [1 + beta (ln(E/E*) + 1)]
template <typename Scalar>
Scalar phase_derivative(Scalar energy, const BasicPhaseContext<Scalar>& ctx) {
    using std::log;
    detail::require_positive_energy(energy);
    const auto& p = ctx.params;
    return ctx.t * (Scalar(1) + p.beta * (log(energy / p.e_star) + Scalar(1)));
}

// Unique positive root E* exp(-1 - 1/beta) of the phase derivative; none for beta = 0.
template <typename Scalar>
std::optional<Scalar> stationary_energy(const BasicPhaseContext<Scalar>& ctx) {
    using std::exp;
    const auto& p = ctx.params;
    if (p.beta == Scalar(0))
        return std::nullopt;
    return p.e_star * exp(Scalar(-1) - Scalar(1) / p.beta);
}

template <typename Scalar>
struct BasicReparameterization {
    BasicDeformationParams<Scalar> params;
    // c with F_{beta,old}(E) = F_{beta,new}(E) + c E
    Scalar linear_offset{0};
};
using Reparameterization = BasicReparameterization<double>;

template <typename Scalar>
BasicReparameterization<Scalar> reparameterize_e_star(const BasicDeformationParams<Scalar>& params,
                                                      Scalar e_star_new) {
    using std::log;
    if (!(e_star_new > Scalar(0)))
        throw ValidationError("new reference scale e_star must be > 0");
    return {BasicDeformationParams<Scalar>(params.beta, e_star_new),
            params.beta * log(e_star_new / params.e_star)};
}

// Elementwise versions over Eigen arrays.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1>
g_function(const Eigen::ArrayBase<Derived>& energies,
           const BasicDeformationParams<typename Derived::Scalar>& params) {
    using Scalar = typename Derived::Scalar;
    if (energies.size() > 0 && !(energies.minCoeff() > Scalar(0)))
        throw ValidationError("energies must all be > 0");
    return energies * (energies / params.e_star).log();
}

template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1>
deformed_energy(const Eigen::ArrayBase<Derived>& energies,
                const BasicDeformationParams<typename Derived::Scalar>& params) {
    return energies + params.beta * g_function(energies, params);
}

} // namespace lsd
