// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lsd/commands.hpp"
#include "lsd/decoherence_analysis.hpp"
#include "lsd/eigensolver.hpp"
#include "lsd/evolution.hpp"
#include "lsd/hamiltonian_models.hpp"
#include "lsd/oscillatory_integrals.hpp"
#include "lsd/platform_constraints.hpp"
#include "lsd/spectral_core.hpp"

using namespace lsd;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Outcome {
    bool pass{true};
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

bool within(double value, double target, double rel) { return std::abs(value - target) <= rel * std::abs(target); }

Config shipped(const std::string& name) { return Config::load(shipped_config_dir() / name); }

double trailer_number(const ResultTable& t, const std::string& key) {
    for (const auto& [k, v] : t.trailer)
        if (k == key)
            return std::get<double>(v);
    throw std::runtime_error("missing trailer " + key);
}

double cell_number(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c))
        return *d;
    return static_cast<double>(std::get<std::int64_t>(c));
}

Outcome worked_example() {
    Outcome o;
    const DeformationParams unit(1.0, two_pi * 1e9);
    const double e1 = two_pi * 5e9, e2 = two_pi * 5.1e9;
    const double g1 = g_function(e1, unit), g2 = g_function(e2, unit);
    o.require(within(g1, 5.05e10, 0.01), "G(E1) " + fmt("%.4e", g1));
    o.require(within(g2, 5.22e10, 0.01), "G(E2) " + fmt("%.4e", g2));
    o.require(within(std::abs(g2 - g1), 1.7e9, 0.05), "|dG| " + fmt("%.4e", g2 - g1));
    const double s6 = frequency_shift(e2, e1, DeformationParams(1e-6, unit.e_star)) / two_pi;
    const double s8 = frequency_shift(e2, e1, DeformationParams(1e-8, unit.e_star)) / two_pi;
    o.require(within(s6, 270.0, 0.05), "shift(1e-6) " + fmt("%.2f Hz", s6));
    o.require(within(s8, 2.7, 0.05), "shift(1e-8) " + fmt("%.3f Hz", s8));
    o.note("G1=" + fmt("%.4e", g1) + " G2=" + fmt("%.4e", g2) + " dG=" + fmt("%.4e", g2 - g1) +
           " shift=" + fmt("%.1f Hz", s6) + "/" + fmt("%.2f Hz", s8));
    return o;
}

Outcome superconducting_bound() {
    Outcome o;
    const auto t = cmd_bounds(shipped("superconducting.cfg"));
    o.require(t.rows.size() == 1, "one row");
    if (t.rows.size() != 1)
        return o;
    const double beta_max = cell_number(t.rows[0][7]);
    o.require(cell_number(t.rows[0][3]) == 1e-4, "T2 = 1e-4 s");
    o.require(cell_number(t.rows[0][5]) == 20.0, "log factor 20");
    o.require(within(beta_max, 5e-6, 0.01), "beta_max " + fmt("%.4e", beta_max));
    o.note("beta_max=" + fmt("%.6e", beta_max));
    return o;
}

Outcome table1_bands() {
    Outcome o;
    // bands written out here, independent of the shipped config's band_lo / band_hi
    const std::vector<std::tuple<std::string, int, int>> bands{{"superconducting_qubits", -5, -5},
                                                               {"trapped_ions", -8, -7},
                                                               {"nv_centers", -7, -6},
                                                               {"cold_atoms", -6, -5}};
    const auto t = cmd_bounds(shipped("table1.cfg"));
    o.require(t.rows.size() == 4 && t.errors.empty(), "four rows, no errors");
    for (const auto& [name, lo, hi] : bands) {
        bool found = false;
        for (const auto& row : t.rows) {
            if (std::get<std::string>(row[0]) != name)
                continue;
            found = true;
            const double beta_max = cell_number(row[7]);
            const int decade = static_cast<int>(std::lround(std::log10(beta_max)));
            o.require(decade >= lo && decade <= hi, name + " decade " + std::to_string(decade));
            o.note(name + "=" + fmt("%.2e", beta_max));
        }
        o.require(found, name + " present");
    }
    return o;
}

Outcome ramsey_protocol() {
    Outcome o;
    const auto cfg = shipped("ramsey_protocol.cfg");
    const double e0 = cfg.frequency("ramsey", "e0"), e1 = cfg.frequency("ramsey", "e1");
    const double e_star = cfg.frequency("ramsey", "e_star");
    const double precision = cfg.frequency("ramsey", "precision");
    const double dg_hz = std::abs(e1 * std::log(e1 / e_star) - e0 * std::log(e0 / e_star)) / two_pi;
    o.require(within(precision / two_pi, 1.0, 1e-12), "precision 1 Hz");
    o.require(std::lround(std::log10(dg_hz)) == 9, "|dG| at the 1e9 Hz scale, got " + fmt("%.3e", dg_hz));
    const double bound = trailer_number(cmd_bounds(cfg), "ramsey_beta_bound");
    o.require(std::lround(std::log10(bound)) == -9, "bound decade, got " + fmt("%.3e", bound));
    o.note("|dG|/2pi=" + fmt("%.3e Hz", dg_hz) + " bound=" + fmt("%.3e", bound));
    return o;
}

Outcome oscillatory_decay() {
    Outcome o;
    const auto cfg = shipped("decay_scan.cfg");
    const double e_star = cfg.frequency("deformation", "e_star");
    const double a = cfg.frequency("window", "e_min"), b = cfg.frequency("window", "e_max");
    const double t = cfg.number("sweep", "t");
    o.require(cfg.text("window", "kind") == "raised_cosine", "raised-cosine window");
    o.require(a == 2.0 * e_star && b == 4.0 * e_star && t == 1.0 / e_star, "support [2E*, 4E*], t = 1/E*");

    const auto table = cmd_integrate(cfg);
    o.require(table.rows.size() >= 4, "at least four betas");
    const WindowProfile f(WindowKind::raised_cosine, a, b);
    double prev_beta = 0.0;
    for (const auto& row : table.rows) {
        const double beta = cell_number(row[0]);
        const double e_s = e_star * std::exp(-1.0 - 1.0 / beta);
        o.require(e_s < a || e_s > b, "stationary point outside support at beta " + fmt("%g", beta));
        if (prev_beta > 0.0)
            o.require(within(beta / prev_beta, 10.0, 1e-9), "geometric decades");
        prev_beta = beta;
        const double c = cell_number(row[5]);
        const double constant = (f.sup_norm() + f.derivative_sup_norm() * (b - a)) / (c * std::abs(t));
        o.require(c > 0.0 && cell_number(row[4]) <= constant,
                  "beta|I| <= constant at beta " + fmt("%g", beta));
    }
    o.require(cell_number(table.rows.front()[0]) == 10.0 && prev_beta == 1e4, "beta from 1e1 to 1e4");
    const double slope = trailer_number(table, "slope");
    o.require(slope <= -0.9, "slope " + fmt("%.3f", slope));
    o.note("slope=" + fmt("%.3f", slope) + " max beta|I|=" + fmt("%.3e", trailer_number(table, "c_fit")) +
           " constant=" + fmt("%.3f", trailer_number(table, "bound_constant")));
    return o;
}

Outcome unitarity_group_law() {
    Outcome o;
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> size(2, 64);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss;
    double worst_norm = 0.0, worst_group = 0.0, worst_reduction = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = size(rng);
        Eigen::VectorXd levels(n);
        double e = 0.05 + 2.0 * unit(rng);
        for (int i = 0; i < n; ++i) {
            levels(i) = e;
            e += 0.01 + unit(rng);
        }
        Eigen::VectorXcd c(n);
        for (int i = 0; i < n; ++i)
            c(i) = {gauss(rng), gauss(rng)};
        const auto psi = StateVector::normalized(Spectrum(levels), c);
        const DeformationParams p(4.0 * unit(rng) - 2.0, std::exp(6.0 * unit(rng) - 3.0));
        const double t1 = 20.0 * unit(rng) - 10.0, t2 = 20.0 * unit(rng) - 10.0;

        const auto a = evolve(psi, t1, p);
        worst_norm = std::max(worst_norm, std::abs(a.norm_squared() - 1.0));
        const auto composed = evolve(a, t2, p);
        const auto direct = evolve(psi, t1 + t2, p);
        worst_group =
            std::max(worst_group, (composed.amplitudes() - direct.amplitudes()).cwiseAbs().maxCoeff());

        const auto plain = evolve(psi, t1, DeformationParams(0.0, p.e_star));
        for (int i = 0; i < n; ++i) {
            const auto expected = psi.amplitudes()(i) * std::polar(1.0, -t1 * levels(i));
            worst_reduction = std::max(worst_reduction, std::abs(plain.amplitudes()(i) - expected));
        }
    }
    o.require(worst_norm < 1e-12, "norm deviation " + fmt("%.2e", worst_norm));
    o.require(worst_group < 1e-10, "group law " + fmt("%.2e", worst_group));
    o.require(worst_reduction < 1e-12, "beta = 0 reduction " + fmt("%.2e", worst_reduction));
    o.note("1000 states: norm " + fmt("%.1e", worst_norm) + ", group " + fmt("%.1e", worst_group) +
           ", beta=0 " + fmt("%.1e", worst_reduction));
    return o;
}

Outcome e_star_reparameterization() {
    Outcome o;
    const double beta = 0.37, e_star = 3.0, e_star_new = 0.011;
    const DeformationParams p(beta, e_star), q(beta, e_star_new);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double e = std::pow(10.0, -6.0 + 12.0 * i / 999.0);
        const double lhs = deformed_energy(e, p) - deformed_energy(e, q);
        const double rhs = beta * std::log(e_star_new / e_star) * e;
        const double scale = std::max({std::abs(deformed_energy(e, p)), std::abs(deformed_energy(e, q)), e});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    const auto rep = reparameterize_e_star(p, e_star_new);
    o.require(within(rep.linear_offset, beta * std::log(e_star_new / e_star), 1e-14), "offset");
    o.require(worst <= 1e-12, "relative deviation " + fmt("%.2e", worst));
    o.note("max relative deviation " + fmt("%.2e", worst) + " over 1000 energies in [1e-6, 1e6]");
    return o;
}

Outcome quartic_asymptotics() {
    Outcome o;
    const std::size_t levels = 60;
    const auto coarse = build_quartic({1.0, levels}, quartic_grid(1.0, levels, 4000));
    const auto fine = build_quartic({1.0, levels}, quartic_grid(1.0, levels, 8001));
    o.require(coarse.spectrum.size() == levels && coarse.fit && fine.fit, "60 levels with fits");
    if (!coarse.fit || !fine.fit)
        return o;
    const double p1 = coarse.fit->exponent, p2 = fine.fit->exponent;
    o.require(std::abs(p2 - 4.0 / 3.0) <= 0.05, "exponent " + fmt("%.4f", p2));
    o.require(std::abs(p2 - p1) < 0.01, "drift " + fmt("%.2e", p2 - p1));
    o.note("exponent " + fmt("%.4f", p1) + " -> " + fmt("%.4f", p2) + " under grid doubling");
    return o;
}

Outcome eigensolver_oracle() {
    Outcome o;
    const auto ho = solve_spectrum([](double x) { return x * x; }, Grid1D(-12.0, 12.0, 4000), 10);
    double worst = 0.0;
    for (int n = 0; n < 10; ++n)
        worst = std::max(worst, std::abs(ho.energy(n) - (2.0 * n + 1.0)) / (2.0 * n + 1.0));
    o.require(worst < 1e-4, "harmonic relative error " + fmt("%.2e", worst));

    const double exact = std::numbers::pi * std::numbers::pi;
    std::vector<double> errors;
    for (std::size_t n : {99, 199, 399})
        errors.push_back(std::abs(solve_spectrum([](double) { return 0.0; }, Grid1D(0.0, 1.0, n), 1).energy(0) - exact));
    for (std::size_t i = 1; i < errors.size(); ++i) {
        const double ratio = errors[i - 1] / errors[i];
        o.require(ratio >= 3.6 && ratio <= 4.4, "box ratio " + fmt("%.3f", ratio));
        o.note("box ratio " + fmt("%.3f", ratio));
    }
    o.note("harmonic max rel err " + fmt("%.2e", worst));
    return o;
}

Outcome envelope_round_trip() {
    Outcome o;
    const double e_m = two_pi * 5.1e9, e_n = two_pi * 5e9, e_star = two_pi * 1e9, beta_true = 1e-6;
    const double gamma = decoherence_rate(e_m, e_n, DeformationParams(beta_true, e_star));
    const EnvelopeModel env(EnvelopeKind::exponential, 1e-4);
    o.require(gamma * env.t2 >= 0.1, "Gamma T2 >= 0.1");
    const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(200, 1.5e-6, 3e-4);

    const auto clean = fit_residual_envelope(synthesize_trace(env, gamma, grid), env, e_m, e_n, e_star);
    o.require(within(clean.gamma_fit, gamma, 0.02), "noiseless gamma " + fmt("%.4e", clean.gamma_fit));
    o.require(within(clean.beta_inferred, beta_true, 0.02), "noiseless beta " + fmt("%.4e", clean.beta_inferred));

    int gamma_ok = 0, beta_ok = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto fit = fit_residual_envelope(synthesize_trace(env, gamma, grid, 0.01, seed), env, e_m, e_n, e_star);
        gamma_ok += within(fit.gamma_fit, gamma, 0.10);
        beta_ok += within(fit.beta_inferred, beta_true, 0.10);
    }
    o.require(gamma_ok >= 95, "noisy gamma " + std::to_string(gamma_ok) + "/100");
    o.require(beta_ok >= 95, "noisy beta " + std::to_string(beta_ok) + "/100");
    o.note("Gamma T2=" + fmt("%.3f", gamma * env.t2) + " noiseless rel err " +
           fmt("%.1e", std::abs(clean.gamma_fit / gamma - 1.0)) + ", 1% noise: " + std::to_string(gamma_ok) +
           "/100 gamma, " + std::to_string(beta_ok) + "/100 beta within 10%");
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"worked two-level example", worked_example},
        {"superconducting bound", superconducting_bound},
        {"platform decade bands", table1_bands},
        {"Ramsey protocol bound", ramsey_protocol},
        {"non-stationary-phase decay", oscillatory_decay},
        {"unitarity and group law", unitarity_group_law},
        {"E* reparameterization", e_star_reparameterization},
        {"quartic asymptotics", quartic_asymptotics},
        {"eigensolver oracles", eigensolver_oracle},
        {"envelope round trip", envelope_round_trip},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu (%s) [%.0f ms]: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), ms, o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
