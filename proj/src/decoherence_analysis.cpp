#include "lsd/decoherence_analysis.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace lsd {

EnvelopeModel::EnvelopeModel(EnvelopeKind kind_, double t2_) : kind(kind_), t2(t2_) {
    if (!(t2 > 0.0) || !std::isfinite(t2))
        throw ValidationError("envelope: T2 must be finite and > 0");
}

double EnvelopeModel::operator()(double t) const {
    const double x = t / t2;
    return kind == EnvelopeKind::exponential ? std::exp(-x) : std::exp(-x * x);
}

double decoherence_rate(double e_m, double e_n, const DeformationParams& params) {
    return std::abs(params.beta) * std::abs(g_function(e_m, params) - g_function(e_n, params));
}

std::optional<double> decoherence_time(double e_m, double e_n, const DeformationParams& params) {
    const double rate = decoherence_rate(e_m, e_n, params);
    if (rate == 0.0)
        return std::nullopt;
    return 1.0 / rate;
}

CoherenceTrace synthesize_trace(const EnvelopeModel& envelope, double gamma, const Eigen::VectorXd& t_grid,
                                double noise_amplitude, std::uint64_t seed) {
    for (Eigen::Index i = 0; i < t_grid.size(); ++i)
        if (!(t_grid(i) > 0.0) || (i > 0 && !(t_grid(i) > t_grid(i - 1))))
            throw ValidationError("synthesize_trace: time grid must be positive and strictly ascending");
    if (noise_amplitude < 0.0)
        throw ValidationError("synthesize_trace: noise amplitude must be >= 0");

    CoherenceTrace trace{t_grid, Eigen::VectorXd(t_grid.size())};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (Eigen::Index i = 0; i < t_grid.size(); ++i) {
        double c = envelope(t_grid(i)) * std::exp(-gamma * t_grid(i));
        if (noise_amplitude > 0.0)
            c *= 1.0 + noise_amplitude * unit(rng);
        trace.coherence(i) = c;
    }
    return trace;
}

EnvelopeFitResult fit_residual_envelope(const CoherenceTrace& trace, const EnvelopeModel& envelope, double e_m,
                                        double e_n, double e_star, const FitWindow& window) {
    if (!(window.t_min < window.t_max) || window.t_min < 0.0)
        throw ValidationError("fit_residual_envelope: fit window needs 0 <= t_min < t_max");
    if (trace.t.size() != trace.coherence.size())
        throw ValidationError("fit_residual_envelope: time and coherence columns differ in length");
    if (trace.t.size() == 0)
        throw NumericalError("fit_residual_envelope: empty trace");

    const DeformationParams params(1.0, e_star);
    const double g_gap = std::abs(g_function(e_m, params) - g_function(e_n, params));
    if (g_gap == 0.0)
        throw ValidationError("fit_residual_envelope: degenerate level pair, |G(E_m) - G(E_n)| = 0");

    const double floor = fit_floor_fraction * trace.coherence(0);
    std::vector<double> ts, rs;
    for (Eigen::Index i = 0; i < trace.t.size(); ++i) {
        const double c = trace.coherence(i);
        if (trace.t(i) < window.t_min || trace.t(i) > window.t_max)
            continue;
        if (!(c > floor) || !(c > 0.0))
            continue;
        const double c_std = envelope(trace.t(i));
        if (!(c_std > 0.0))
            throw NumericalError("fit_residual_envelope: C_std is zero at t = " + std::to_string(trace.t(i)));
        ts.push_back(trace.t(i));
        rs.push_back(std::log(c / c_std));
    }
    if (ts.size() < 3)
        throw NumericalError("fit_residual_envelope: fewer than 3 usable points (" + std::to_string(ts.size()) + ")");

    const auto n = static_cast<Eigen::Index>(ts.size());
    const Eigen::Map<const Eigen::ArrayXd> t(ts.data(), n), r(rs.data(), n);
    const Eigen::ArrayXd dt = t - t.mean();
    const double sxx = (dt * dt).sum();
    if (!(sxx > 0.0))
        throw NumericalError("fit_residual_envelope: time samples do not vary");
    const double slope = (dt * (r - r.mean())).sum() / sxx;
    const double intercept = r.mean() - slope * t.mean();
    const Eigen::ArrayXd resid = r - (intercept + slope * t);
    const double ssr = (resid * resid).sum();

    EnvelopeFitResult out;
    out.points_used = ts.size();
    out.gamma_raw = -slope;
    out.clamped = out.gamma_raw < 0.0;
    out.gamma_fit = std::max(out.gamma_raw, 0.0);
    out.gamma_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
    out.residual_norm = std::sqrt(ssr);
    out.beta_inferred = out.gamma_fit / g_gap;
    out.beta_stderr = out.gamma_stderr / g_gap;
    out.significant = out.gamma_raw > 2.0 * out.gamma_stderr;
    out.gamma_upper = out.gamma_fit + 2.0 * out.gamma_stderr;
    out.beta_upper = out.gamma_upper / g_gap;
    return out;
}

std::complex<double> windowed_coherence(const StateVector& state0, std::size_t m, std::size_t n,
                                        const DeformationParams& params, double t_center, double window) {
    if (!(window > 0.0))
        throw ValidationError("windowed_coherence: window must be > 0");
    const auto sample = off_diagonal(state0, m, n, t_center, params);
    const double x = 0.5 * sample.effective_frequency * window;
    const double sinc = std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
    return sample.rho_mn * sinc;
}

} // namespace lsd
