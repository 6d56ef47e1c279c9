#include "lsd/oscillatory_integrals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace lsd {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int rule_order = 16;

// int_{-1}^{1} exp(-1 / (1 - u^2)) du
constexpr double bump_integral = 0.44399381616807943782;

struct GaussLegendre {
    std::array<double, rule_order> nodes{};
    std::array<double, rule_order> weights{};
};

// Golub-Welsch: nodes are the eigenvalues of the Legendre Jacobi matrix.
GaussLegendre make_gauss_legendre() {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(rule_order, rule_order);
    for (int k = 1; k < rule_order; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k - 1, k) = b;
        jacobi(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussLegendre rule;
    for (int i = 0; i < rule_order; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = 2.0 * v0 * v0;
    }
    // symmetrize to remove eigensolver asymmetry
    for (int i = 0; i < rule_order / 2; ++i) {
        const auto lo = static_cast<std::size_t>(i), hi = static_cast<std::size_t>(rule_order - 1 - i);
        const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
        const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = rule.weights[hi] = w;
    }
    return rule;
}

const GaussLegendre& gauss_legendre() {
    static const GaussLegendre rule = make_gauss_legendre();
    return rule;
}

struct PanelSum {
    std::complex<double> value{};
    double abs_mass{0};   // int |f|
    double max_phase{0};  // max |Phi|
};

class PanelRule {
public:
    PanelRule(const WindowProfile& profile, const PhaseContext& ctx) : profile_(profile), ctx_(ctx) {}

    PanelSum operator()(double a, double b) const {
        const auto& rule = gauss_legendre();
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        PanelSum sum;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double e = mid + half * rule.nodes[i];
            const double f = profile_(e);
            if (f == 0.0)
                continue;
            const double ph = phase(e, ctx_);
            sum.value += rule.weights[i] * f * std::polar(1.0, -ph);
            sum.abs_mass += rule.weights[i] * std::abs(f);
            sum.max_phase = std::max(sum.max_phase, std::abs(ph));
        }
        sum.value *= half;
        sum.abs_mass *= half;
        return sum;
    }

    std::size_t evaluations() const { return static_cast<std::size_t>(rule_order); }

private:
    const WindowProfile& profile_;
    const PhaseContext& ctx_;
};

struct Panel {
    double a{0};
    double b{0};
    PanelSum left;
    PanelSum right;
    double error{0};
    double noise_floor{0};

    std::complex<double> value() const { return left.value + right.value; }
    bool refinable() const { return error > noise_floor; }
    bool operator<(const Panel& other) const { return error - noise_floor < other.error - other.noise_floor; }
};

Panel make_panel(const PanelRule& rule, double a, double b, const PanelSum& coarse) {
    const double mid = 0.5 * (a + b);
    Panel p{a, b, rule(a, mid), rule(mid, b), 0.0, 0.0};
    p.error = std::abs(p.value() - coarse.value);
    const double mass = p.left.abs_mass + p.right.abs_mass;
    const double phase_scale = std::max(p.left.max_phase, p.right.max_phase);
    p.noise_floor = 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + phase_scale) * mass;
    return p;
}

// Panel edges no wider than one local wavelength; Phi' is monotone in E, so the
// largest |Phi'| on a panel sits at one of its ends.
std::vector<double> wavelength_panels(const WindowProfile& profile, const PhaseContext& ctx) {
    const double a = profile.e_min(), b = profile.e_max();
    const double cap = profile.width() / 8.0;
    auto wavelength = [&](double e) {
        const double slope = std::abs(phase_derivative(e, ctx));
        return slope > 0.0 ? 2.0 * pi / slope : std::numeric_limits<double>::infinity();
    };
    std::vector<double> edges{a};
    double x = a;
    while (b - x > 1e-14 * profile.width()) {
        double w = std::min({cap, wavelength(x), b - x});
        for (int pass = 0; pass < 2; ++pass)
            w = std::min(w, wavelength(x + w));
        x = (b - x - w < 1e-3 * w) ? b : x + w;
        edges.push_back(x);
    }
    return edges;
}

} // namespace

WindowProfile::WindowProfile(WindowKind kind, double e_min, double e_max, double amplitude)
    : kind_(kind), e_min_(e_min), e_max_(e_max), amplitude_(amplitude) {
    if (!(e_min > 0.0) || !(e_min < e_max) || !std::isfinite(e_max))
        throw ValidationError("window profile: need 0 < E_min < E_max < inf");
    if (!std::isfinite(amplitude))
        throw ValidationError("window profile: amplitude must be finite");
}

double WindowProfile::operator()(double energy) const {
    if (energy <= e_min_ || energy >= e_max_)
        return 0.0;
    const double u = (2.0 * energy - e_min_ - e_max_) / width();
    if (kind_ == WindowKind::raised_cosine)
        return amplitude_ * 0.5 * (1.0 + std::cos(pi * u));
    return amplitude_ * std::exp(-1.0 / (1.0 - u * u));
}

double WindowProfile::derivative(double energy) const {
    if (energy <= e_min_ || energy >= e_max_)
        return 0.0;
    const double u = (2.0 * energy - e_min_ - e_max_) / width();
    const double du = 2.0 / width();
    if (kind_ == WindowKind::raised_cosine)
        return -amplitude_ * 0.5 * pi * std::sin(pi * u) * du;
    const double s = 1.0 - u * u;
    return amplitude_ * std::exp(-1.0 / s) * (-2.0 * u / (s * s)) * du;
}

double WindowProfile::sup_norm() const {
    if (kind_ == WindowKind::raised_cosine)
        return std::abs(amplitude_);
    return std::abs(amplitude_) * std::exp(-1.0);
}

double WindowProfile::derivative_sup_norm() const {
    if (kind_ == WindowKind::raised_cosine)
        return std::abs(amplitude_) * pi / width();
    // |d/du exp(-1/(1-u^2))| peaks at u^4 = 1/3
    const double u = std::pow(3.0, -0.25);
    const double s = 1.0 - u * u;
    return std::abs(amplitude_) * std::exp(-1.0 / s) * 2.0 * u / (s * s) * 2.0 / width();
}

double WindowProfile::integral() const {
    if (kind_ == WindowKind::raised_cosine)
        return amplitude_ * 0.5 * width();
    return amplitude_ * bump_integral * 0.5 * width();
}

IntegralResult integrate(const WindowProfile& profile, const PhaseContext& ctx,
                         const IntegrationOptions& options) {
    if (!(options.relative_tolerance > 0.0))
        throw ValidationError("integrate: tolerance must be > 0");
    IntegralResult result;
    if (profile.amplitude() == 0.0)
        return result;

    const double target = options.relative_tolerance * std::abs(profile.integral());
    const PanelRule rule(profile, ctx);

    std::priority_queue<Panel> queue;
    std::vector<Panel> settled;
    double total_error = 0.0;
    const auto edges = wavelength_panels(profile, ctx);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto panel = make_panel(rule, edges[i], edges[i + 1], rule(edges[i], edges[i + 1]));
        result.nodes += 3 * rule.evaluations();
        total_error += panel.error;
        if (panel.refinable())
            queue.push(panel);
        else
            settled.push_back(panel);
    }

    while (total_error > target && !queue.empty()) {
        if (result.nodes > options.node_budget) {
            std::ostringstream msg;
            msg << "integrate: node budget " << options.node_budget << " exhausted, error estimate "
                << total_error << " above target " << target;
            throw NumericalError(msg.str());
        }
        const Panel worst = queue.top();
        queue.pop();
        total_error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (auto child : {make_panel(rule, worst.a, mid, worst.left),
                           make_panel(rule, mid, worst.b, worst.right)}) {
            result.nodes += 2 * rule.evaluations();
            total_error += child.error;
            if (child.refinable())
                queue.push(child);
            else
                settled.push_back(child);
        }
    }

    while (!queue.empty()) {
        settled.push_back(queue.top());
        queue.pop();
    }
    std::sort(settled.begin(), settled.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const auto& p : settled)
        result.value += p.value();
    result.error_estimate = std::max(total_error, 0.0);
    result.panels = settled.size();
    return result;
}

SlopeBound phase_slope_bound(const WindowProfile& profile, const PhaseContext& ctx) {
    const auto& p = ctx.params;
    SlopeBound bound;
    if (p.beta == 0.0) {
        bound.min_phase_derivative = std::abs(ctx.t);
        return bound;
    }
    auto reduced = [&](double e) { return 1.0 / p.beta + std::log(e / p.e_star) + 1.0; };
    const double lo = reduced(profile.e_min()), hi = reduced(profile.e_max());
    if (lo * hi <= 0.0)
        return bound;
    bound.c = std::min(std::abs(lo), std::abs(hi));
    bound.min_phase_derivative = bound.c * std::abs(ctx.t) * std::abs(p.beta);
    bound.hypothesis_ok = ctx.t != 0.0;
    return bound;
}

double integration_by_parts_constant(const WindowProfile& profile, double c, double t) {
    return (profile.sup_norm() + profile.derivative_sup_norm() * profile.width()) / (c * std::abs(t));
}

double least_squares_slope(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ValidationError("least_squares_slope: need >= 2 paired points");
    const Eigen::ArrayXd dx = x.array() - x.mean();
    const Eigen::ArrayXd dy = y.array() - y.mean();
    const double sxx = (dx * dx).sum();
    if (!(sxx > 0.0))
        throw ValidationError("least_squares_slope: x values must not all coincide");
    return (dx * dy).sum() / sxx;
}

DecayFit decay_scan(const WindowProfile& profile, double t, double e_star,
                    const std::vector<double>& beta_grid, const IntegrationOptions& options) {
    if (beta_grid.empty())
        throw ValidationError("decay_scan: empty beta grid");
    for (std::size_t i = 0; i < beta_grid.size(); ++i) {
        if (!(beta_grid[i] > 0.0) || !std::isfinite(beta_grid[i]))
            throw ValidationError("decay_scan: beta grid values must be finite and > 0");
        if (i > 0 && !(beta_grid[i] > beta_grid[i - 1]))
            throw ValidationError("decay_scan: beta grid must be strictly increasing");
    }

    const double margin = stationary_margin_fraction * profile.width();
    DecayFit fit;
    for (double beta : beta_grid) {
        const PhaseContext ctx(t, DeformationParams(beta, e_star));
        const auto stationary = stationary_energy(ctx);
        const auto bound = phase_slope_bound(profile, ctx);
        if (!bound.hypothesis_ok ||
            (stationary && *stationary >= profile.e_min() - margin && *stationary <= profile.e_max() + margin)) {
            fit.excluded_betas.push_back(beta);
            continue;
        }
        const auto integral = integrate(profile, ctx, options);
        fit.points.push_back({beta, integral.value, std::abs(integral.value), bound.c, integral.error_estimate});
    }
    if (fit.points.empty())
        throw ValidationError("decay_scan: every beta in the grid violates the non-stationary-phase hypothesis");

    fit.beta0 = fit.points.front().beta;
    fit.c_bound = std::numeric_limits<double>::infinity();
    std::vector<double> log_beta, log_mag;
    for (const auto& p : fit.points) {
        fit.c_fit = std::max(fit.c_fit, p.beta * p.magnitude);
        fit.c_bound = std::min(fit.c_bound, p.c);
        if (p.magnitude > 0.0) {
            log_beta.push_back(std::log(p.beta));
            log_mag.push_back(std::log(p.magnitude));
        }
    }
    fit.bound_constant = integration_by_parts_constant(profile, fit.c_bound, t);
    if (log_beta.size() >= 2)
        fit.slope = least_squares_slope(Eigen::Map<Eigen::VectorXd>(log_beta.data(), static_cast<Eigen::Index>(log_beta.size())),
                                        Eigen::Map<Eigen::VectorXd>(log_mag.data(), static_cast<Eigen::Index>(log_mag.size())));
    return fit;
}

} // namespace lsd
