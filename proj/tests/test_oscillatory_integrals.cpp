#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "lsd/oscillatory_integrals.hpp"

using namespace lsd;

namespace {

// Independent oracle: composite trapezoid on a uniform grid, f and phase
// evaluated from their defining formulas rather than the library.
std::complex<double> trapezoid_oracle(WindowKind kind, double a, double b, double t, double beta, double e_star,
                                      std::size_t nodes = 1'000'000) {
    const double h = (b - a) / static_cast<double>(nodes - 1);
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
        const double e = a + h * static_cast<double>(i);
        const double u = (2.0 * e - a - b) / (b - a);
        double f = 0.0;
        if (std::abs(u) < 1.0)
            f = kind == WindowKind::raised_cosine ? 0.5 * (1.0 + std::cos(std::numbers::pi * u))
                                                  : std::exp(-1.0 / (1.0 - u * u));
        const double w = (i == 0 || i + 1 == nodes) ? 0.5 : 1.0;
        const double ph = t * e * (1.0 + beta * std::log(e / e_star));
        sum += w * f * std::complex<double>(std::cos(ph), -std::sin(ph));
    }
    return sum * h;
}

} // namespace

TEST_CASE("window profiles: closed-form norms and integrals") {
    for (auto kind : {WindowKind::raised_cosine, WindowKind::smooth_bump}) {
        const WindowProfile f(kind, 2.0, 4.5, 1.7);
        double sup = 0.0, dsup = 0.0;
        for (int i = 0; i <= 200000; ++i) {
            const double e = 2.0 + 2.5 * i / 200000.0;
            sup = std::max(sup, std::abs(f(e)));
            dsup = std::max(dsup, std::abs(f.derivative(e)));
        }
        CHECK(f.sup_norm() == doctest::Approx(sup).epsilon(1e-8));
        CHECK(f.derivative_sup_norm() == doctest::Approx(dsup).epsilon(1e-8));
        CHECK(f.integral() == doctest::Approx(trapezoid_oracle(kind, 2.0, 4.5, 0.0, 0.0, 1.0).real() * 1.7).epsilon(1e-10));
        CHECK(f(2.0) == 0.0);
        CHECK(f(4.5) == 0.0);
        CHECK(f.derivative(2.0) == 0.0);
        // derivative against finite differences
        const double e = 3.1, h = 1e-6;
        CHECK(f.derivative(e) == doctest::Approx((f(e + h) - f(e - h)) / (2 * h)).epsilon(1e-6));
    }
    CHECK(WindowProfile(WindowKind::raised_cosine, 1.0, 3.0).derivative_sup_norm() ==
          doctest::Approx(std::numbers::pi / 2.0));
    CHECK_THROWS_AS(WindowProfile(WindowKind::raised_cosine, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(WindowProfile(WindowKind::raised_cosine, 2.0, 1.0), ValidationError);
}

TEST_CASE("integrate: t = 0 and zero amplitude") {
    for (auto kind : {WindowKind::raised_cosine, WindowKind::smooth_bump}) {
        const WindowProfile f(kind, 2.0, 4.0);
        const auto r = integrate(f, PhaseContext(0.0, DeformationParams(3.0, 1.0)));
        CHECK(r.value.real() == doctest::Approx(f.integral()).epsilon(1e-13));
        CHECK(std::abs(r.value.imag()) < 1e-15);
    }
    const WindowProfile zero(WindowKind::raised_cosine, 2.0, 4.0, 0.0);
    CHECK(integrate(zero, PhaseContext(1.0, DeformationParams(3.0, 1.0))).value == std::complex<double>(0.0));
}

TEST_CASE("integrate matches the dense trapezoid oracle") {
    struct Case {
        WindowKind kind;
        double t, beta;
    };
    for (const auto& c : {Case{WindowKind::raised_cosine, 1.0, 0.0}, Case{WindowKind::raised_cosine, 40.0, 0.0},
                          Case{WindowKind::raised_cosine, 1.0, 10.0}, Case{WindowKind::raised_cosine, 1.0, 100.0},
                          Case{WindowKind::raised_cosine, -2.5, 30.0}, Case{WindowKind::smooth_bump, 1.0, 10.0},
                          Case{WindowKind::smooth_bump, 3.0, 0.5}}) {
        const WindowProfile f(c.kind, 2.0, 4.0);
        const auto r = integrate(f, PhaseContext(c.t, DeformationParams(c.beta, 1.0)), {1e-12});
        const auto oracle = trapezoid_oracle(c.kind, 2.0, 4.0, c.t, c.beta, 1.0);
        CHECK(std::abs(r.value - oracle) < 1e-8);
        CHECK(r.error_estimate < 1e-10);
    }
}

TEST_CASE("integrate: panels resolve every oscillation with >= 16 nodes") {
    const WindowProfile f(WindowKind::raised_cosine, 2.0, 4.0);
    const PhaseContext ctx(1.0, DeformationParams(1e4, 1.0));
    const auto r = integrate(f, ctx);
    const double oscillations = std::abs(phase(4.0, ctx) - phase(2.0, ctx)) / (2.0 * std::numbers::pi);
    CHECK(static_cast<double>(r.panels) >= oscillations);
    CHECK(static_cast<double>(r.nodes) >= 16.0 * oscillations);
}

TEST_CASE("integrate: linearity and conjugation symmetry") {
    const PhaseContext ctx(1.3, DeformationParams(25.0, 1.0));
    const PhaseContext back(-1.3, DeformationParams(25.0, 1.0));
    for (auto kind : {WindowKind::raised_cosine, WindowKind::smooth_bump}) {
        const auto base = integrate(WindowProfile(kind, 1.5, 3.0, 1.0), ctx, {1e-12}).value;
        const auto scaled = integrate(WindowProfile(kind, 1.5, 3.0, -3.5), ctx, {1e-12}).value;
        CHECK(std::abs(scaled - (-3.5) * base) < 1e-12);
        const auto reversed = integrate(WindowProfile(kind, 1.5, 3.0, 1.0), back, {1e-12}).value;
        CHECK(std::abs(reversed - std::conj(base)) < 1e-12);
    }
}

TEST_CASE("integrate: node budget exhaustion is a numerical error") {
    // a single unrefined panel cannot resolve the bump's flat shoulders
    const WindowProfile f(WindowKind::smooth_bump, 2.0, 4.0);
    IntegrationOptions tiny;
    tiny.relative_tolerance = 1e-12;
    tiny.node_budget = 60;
    CHECK_THROWS_AS(integrate(f, PhaseContext(0.0, DeformationParams(0.0, 1.0)), tiny), NumericalError);
    CHECK_NOTHROW(integrate(f, PhaseContext(0.0, DeformationParams(0.0, 1.0))));
}

TEST_CASE("phase slope bound") {
    const double e = std::numbers::e;
    const WindowProfile f(WindowKind::raised_cosine, e, e * e);
    const auto large = phase_slope_bound(f, PhaseContext(1.0, DeformationParams(1e8, 1.0)));
    CHECK(large.hypothesis_ok);
    CHECK(large.c == doctest::Approx(2.0).epsilon(1e-7));

    // E_s = exp(-1 - 1/beta) = 0.2 lies in [0.1, 0.3] for beta = -1/(1 + ln 0.2)
    const WindowProfile low(WindowKind::raised_cosine, 0.1, 0.3);
    const double beta_in = -1.0 / (1.0 + std::log(0.2));
    const auto failed = phase_slope_bound(low, PhaseContext(1.0, DeformationParams(beta_in, 1.0)));
    CHECK_FALSE(failed.hypothesis_ok);
    CHECK(failed.c == 0.0);

    const auto flat = phase_slope_bound(f, PhaseContext(-2.5, DeformationParams(0.0, 1.0)));
    CHECK_FALSE(flat.hypothesis_ok);
    CHECK(flat.min_phase_derivative == 2.5);

    // |Phi'| >= c |t| |beta| pointwise on the support
    const PhaseContext ctx(0.7, DeformationParams(3.0, 1.0));
    const auto b = phase_slope_bound(f, ctx);
    for (int i = 0; i <= 100; ++i) {
        const double energy = f.e_min() + f.width() * i / 100.0;
        CHECK(std::abs(phase_derivative(energy, ctx)) >= b.c * 0.7 * 3.0 * (1.0 - 1e-14));
    }
}

TEST_CASE("decay scan: suppression at least 1/beta and the integration-by-parts bound") {
    const WindowProfile f(WindowKind::raised_cosine, 2.0, 4.0);
    const auto fit = decay_scan(f, 1.0, 1.0, {10.0, 100.0, 1000.0, 1e4}, {1e-12});
    REQUIRE(fit.slope);
    CHECK(*fit.slope <= -0.9);
    CHECK(fit.excluded_betas.empty());
    CHECK(fit.beta0 == 10.0);
    for (const auto& p : fit.points)
        CHECK(p.beta * p.magnitude <= integration_by_parts_constant(f, p.c, 1.0));
    CHECK(fit.c_fit <= fit.bound_constant);

    // cross-check the two smallest betas against the dense oracle
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(std::abs(fit.points[i].value - trapezoid_oracle(WindowKind::raised_cosine, 2.0, 4.0, 1.0,
                                                              fit.points[i].beta, 1.0)) < 1e-8);
}

TEST_CASE("decay scan: a beta with its stationary point in the support is excluded") {
    const WindowProfile low(WindowKind::raised_cosine, 0.1, 0.3);
    const double beta_in = -1.0 / (1.0 + std::log(0.2));
    const auto fit = decay_scan(low, 1.0, 1.0, {0.5, beta_in, 10.0, 100.0, 1000.0});
    REQUIRE(fit.excluded_betas.size() == 1);
    CHECK(fit.excluded_betas[0] == beta_in);
    CHECK(fit.points.size() == 4);
    CHECK(fit.slope.has_value());

    CHECK_THROWS_AS(decay_scan(low, 1.0, 1.0, {beta_in}), ValidationError);
    CHECK_THROWS_AS(decay_scan(low, 1.0, 1.0, {}), ValidationError);
    CHECK_THROWS_AS(decay_scan(low, 1.0, 1.0, {10.0, 5.0}), ValidationError);
}

TEST_CASE("decay scan with a single beta has no slope") {
    const WindowProfile f(WindowKind::smooth_bump, 2.0, 4.0);
    const auto fit = decay_scan(f, 1.0, 1.0, {50.0});
    CHECK_FALSE(fit.slope.has_value());
    CHECK(fit.points.size() == 1);
}
