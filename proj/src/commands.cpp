#include "lsd/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "lsd/decoherence_analysis.hpp"
#include "lsd/errors.hpp"
#include "lsd/evolution.hpp"
#include "lsd/oscillatory_integrals.hpp"
#include "lsd/platform_constraints.hpp"

namespace lsd {

namespace {

std::set<std::string> merge(std::set<std::string> a, const std::set<std::string>& b) {
    a.insert(b.begin(), b.end());
    return a;
}

const std::set<std::string> output_keys{"format", "path", "precision"};
const std::set<std::string> grid_keys{"x_min", "x_max", "n_points"};

std::set<std::string> deformation_keys(bool with_beta) {
    auto keys = frequency_keys({"e_star"});
    if (with_beta)
        keys.insert("beta");
    return keys;
}

std::set<std::string> model_keys_for(const std::string& kind) {
    if (kind == "two_level")
        return merge({"kind"}, frequency_keys({"e1", "e2"}));
    if (kind == "levels")
        return merge({"kind"}, frequency_keys({"energies"}));
    if (kind == "quartic")
        return {"kind", "lambda", "levels"};
    if (kind == "frw")
        return {"kind", "potential", "stiffness", "quartic", "a0", "offset", "energy_shift", "levels"};
    if (kind == "schwarzschild_interior")
        return {"kind", "alpha", "beta1", "epsilon_wall", "levels"};
    throw ValidationError("model.kind: unknown model '" + kind +
                          "' (expected two_level, levels, quartic, frw, schwarzschild_interior)");
}

std::set<std::string> all_model_keys() {
    std::set<std::string> keys;
    for (const char* k : {"two_level", "levels", "quartic", "frw", "schwarzschild_interior"})
        keys = merge(std::move(keys), model_keys_for(k));
    return keys;
}

void check_model_keys(const Config& config) {
    const auto kind = config.text("model", "kind");
    const auto allowed = model_keys_for(kind);
    for (const auto& key : all_model_keys())
        if (config.has("model", key) && !allowed.contains(key))
            throw ValidationError(config.source() + ": model." + key + ": not a parameter of model kind '" +
                                  kind + "'");
    const bool numeric = kind == "quartic" || kind == "frw" || kind == "schwarzschild_interior";
    if (numeric && !config.has_section("grid"))
        throw ValidationError(config.source() + ": model kind '" + kind + "' needs a [grid] section");
    if (!numeric && config.has_section("grid"))
        throw ValidationError(config.source() + ": [grid] is only used by numerical models");
}

DeformationParams read_deformation(const Config& config) {
    return {config.number("deformation", "beta"), config.frequency("deformation", "e_star")};
}

Eigen::VectorXd linspace_or_list(const Config& config, const std::string& section, const std::string& prefix) {
    const std::string list_key = prefix + "_values";
    const bool has_list = config.has(section, list_key);
    const bool has_range = config.has(section, prefix + "_start") || config.has(section, prefix + "_stop") ||
                           config.has(section, prefix + "_count");
    if (has_list == has_range)
        throw ValidationError(config.source() + ": " + section + ": give either " + list_key + " or " + prefix +
                              "_start/" + prefix + "_stop/" + prefix + "_count");
    if (has_list) {
        const auto values = config.numbers(section, list_key);
        return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
    }
    const double start = config.number(section, prefix + "_start");
    const double stop = config.number(section, prefix + "_stop");
    const auto count = config.count(section, prefix + "_count");
    if (count < 1)
        throw ValidationError(config.source() + ": " + section + "." + prefix + "_count must be >= 1");
    if (count == 1)
        return Eigen::VectorXd::Constant(1, start);
    return Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(count), start, stop);
}

Cell timescale_cell(const std::optional<double>& seconds) {
    if (!seconds)
        return Infinite{};
    return *seconds;
}

// Fringe frequency from the unwrapped phase of rho(t): arg rho = arg(c_m c_n^*) - omega t.
std::optional<double> fitted_fringe_frequency(const Eigen::VectorXd& t, const Eigen::VectorXcd& rho) {
    if (t.size() < 2)
        return std::nullopt;
    Eigen::VectorXd unwrapped(t.size());
    unwrapped(0) = std::arg(rho(0));
    for (Eigen::Index i = 1; i < t.size(); ++i) {
        const double step = std::arg(rho(i) * std::conj(rho(i - 1)));
        unwrapped(i) = unwrapped(i - 1) + step;
    }
    return -least_squares_slope(t, unwrapped);
}

WindowKind parse_window_kind(const Config& config) {
    const auto kind = config.text("window", "kind");
    if (kind == "raised_cosine")
        return WindowKind::raised_cosine;
    if (kind == "smooth_bump")
        return WindowKind::smooth_bump;
    throw ValidationError(config.source() + ": window.kind: expected raised_cosine or smooth_bump, got '" + kind + "'");
}

EnvelopeKind parse_envelope_kind(const Config& config, const std::string& section) {
    const auto kind = config.text(section, "envelope");
    if (kind == "exponential")
        return EnvelopeKind::exponential;
    if (kind == "gaussian")
        return EnvelopeKind::gaussian;
    throw ValidationError(config.source() + ": " + section + ".envelope: expected exponential or gaussian, got '" +
                          kind + "'");
}

} // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw ValidationError("output format must be csv or json, got '" + name + "'");
}

OutputSettings output_settings(const Config& config) {
    OutputSettings out;
    if (const auto f = config.optional_text("output", "format"))
        out.format = parse_output_format(*f);
    if (const auto p = config.optional_text("output", "path"))
        out.path = config.resolve(*p);
    if (const auto p = config.optional_count("output", "precision")) {
        if (*p < 1 || *p > 17)
            throw ValidationError(config.source() + ": output.precision must be in 1..17");
        out.precision = static_cast<int>(*p);
    }
    return out;
}

ModelSpectrum build_model_spectrum(const Config& config) {
    check_model_keys(config);
    const auto kind = config.text("model", "kind");
    auto grid = [&](std::optional<double> x_min_default = std::nullopt) {
        const auto x_min = x_min_default && !config.has("grid", "x_min") ? *x_min_default
                                                                         : config.number("grid", "x_min");
        return Grid1D(x_min, config.number("grid", "x_max"), config.count("grid", "n_points"));
    };

    if (kind == "two_level")
        return {kind, build_two_level({config.frequency("model", "e1"), config.frequency("model", "e2")}), {}};
    if (kind == "levels") {
        const auto e = config.frequencies("model", "energies");
        return {kind, Spectrum(Eigen::Map<const Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size()))), {}};
    }
    if (kind == "quartic") {
        auto result = build_quartic({config.number("model", "lambda"), config.count("model", "levels")}, grid());
        return {kind, std::move(result.spectrum), result.fit};
    }
    if (kind == "frw") {
        FRWModel m;
        const auto potential = config.optional_text("model", "potential").value_or("harmonic");
        if (potential == "harmonic")
            m.kind = FrwPotentialKind::harmonic;
        else if (potential == "anharmonic")
            m.kind = FrwPotentialKind::anharmonic;
        else
            throw ValidationError(config.source() + ": model.potential: expected harmonic or anharmonic");
        if (m.kind == FrwPotentialKind::harmonic && config.has("model", "quartic"))
            throw ValidationError(config.source() + ": model.quartic: only used by the anharmonic potential");
        m.stiffness = config.optional_number("model", "stiffness").value_or(1.0);
        m.quartic = config.optional_number("model", "quartic").value_or(0.0);
        m.a0 = config.optional_number("model", "a0").value_or(0.0);
        m.offset = config.optional_number("model", "offset").value_or(0.0);
        m.energy_shift = config.optional_number("model", "energy_shift").value_or(0.0);
        m.levels_requested = config.count("model", "levels");
        return {kind, build_frw(m, grid()), {}};
    }
    SchwarzschildInteriorModel m;
    m.alpha = config.number("model", "alpha");
    m.beta1 = config.number("model", "beta1");
    if (!(m.beta1 > 0.0))
        throw ValidationError(config.source() + ": model.beta1 must be > 0");
    m.epsilon_wall = config.optional_number("model", "epsilon_wall").value_or(default_epsilon_wall(m.beta1));
    m.levels_requested = config.count("model", "levels");
    return {kind, build_schwarzschild_interior(m, grid(m.epsilon_wall)), {}};
}

ResultTable cmd_deform(const Config& config) {
    config.check_schema({{"deformation", deformation_keys(true), true},
                         {"model", all_model_keys(), true},
                         {"grid", grid_keys, false},
                         {"output", output_keys, false}});
    const auto params = read_deformation(config);
    check_model_keys(config);
    output_settings(config);
    const auto model = build_model_spectrum(config);
    const auto& spectrum = model.spectrum;

    ResultTable table;
    table.columns = {{"n", "1"}, {"E", "s^-1"}, {"G", "s^-1"}, {"F", "s^-1"}, {"tau_dec_vs_ground", "s"}};
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const double e = spectrum.energy(i);
        table.add_row({static_cast<std::int64_t>(spectrum.indices()[i]), e, g_function(e, params),
                       deformed_energy(e, params), timescale_cell(decoherence_time(e, spectrum.energy(0), params))});
    }
    table.trailer.emplace_back("model", model.kind);
    table.trailer.emplace_back("beta", params.beta);
    table.trailer.emplace_back("e_star", params.e_star);
    if (model.fit) {
        table.trailer.emplace_back("fit_exponent", model.fit->exponent);
        table.trailer.emplace_back("fit_kappa", model.fit->kappa);
        table.trailer.emplace_back("fit_first_level", static_cast<std::int64_t>(model.fit->first_level));
        table.trailer.emplace_back("fit_points", static_cast<std::int64_t>(model.fit->points));
    }
    return table;
}

ResultTable cmd_evolve(const Config& config) {
    config.check_schema({{"deformation", deformation_keys(true), true},
                         {"model", all_model_keys(), true},
                         {"grid", grid_keys, false},
                         {"state", {"amplitudes_re", "amplitudes_im", "m", "n"}, true},
                         {"sweep", {"t_values", "t_start", "t_stop", "t_count", "window"}, true},
                         {"output", output_keys, false}});
    const auto params = read_deformation(config);
    check_model_keys(config);
    output_settings(config);
    const auto times = linspace_or_list(config, "sweep", "t");
    const auto window = config.optional_number("sweep", "window");
    if (window && !(*window > 0.0))
        throw ValidationError(config.source() + ": sweep.window must be > 0");
    const auto re = config.numbers("state", "amplitudes_re");
    std::vector<double> im(re.size(), 0.0);
    if (config.has("state", "amplitudes_im"))
        im = config.numbers("state", "amplitudes_im");
    if (im.size() != re.size())
        throw ValidationError(config.source() + ": state.amplitudes_im must match amplitudes_re in length");
    const std::size_t m = config.optional_count("state", "m").value_or(0);
    const std::size_t n = config.optional_count("state", "n").value_or(1);

    auto model = build_model_spectrum(config);
    Eigen::VectorXcd amplitudes(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i)
        amplitudes(static_cast<Eigen::Index>(i)) = {re[i], im[i]};
    const auto state = StateVector::normalized(std::move(model.spectrum), std::move(amplitudes));
    if (m == n || m >= state.size() || n >= state.size())
        throw ValidationError(config.source() + ": state.m and state.n must be distinct valid level positions");

    ResultTable table;
    table.columns = {{"t", "s"}, {"re_rho", "1"}, {"im_rho", "1"}, {"abs_rho", "1"}};
    if (window)
        table.columns.push_back({"windowed_abs_rho", "1"});
    Eigen::VectorXcd rho(times.size());
    double omega = 0.0;
    for (Eigen::Index i = 0; i < times.size(); ++i) {
        const auto sample = off_diagonal(state, m, n, times(i), params);
        rho(i) = sample.rho_mn;
        omega = sample.effective_frequency;
        std::vector<Cell> row{times(i), sample.rho_mn.real(), sample.rho_mn.imag(), std::abs(sample.rho_mn)};
        if (window)
            row.emplace_back(std::abs(windowed_coherence(state, m, n, params, times(i), *window)));
        table.add_row(std::move(row));
    }

    const double e_m = state.spectrum().energy(m), e_n = state.spectrum().energy(n);
    const double shift = frequency_shift(e_m, e_n, params);
    table.trailer.emplace_back("bohr_frequency", e_m - e_n);
    table.trailer.emplace_back("effective_frequency", omega);
    table.trailer.emplace_back("frequency_shift", shift);
    table.trailer.emplace_back("frequency_shift_hz", shift / (2.0 * std::numbers::pi));
    if (const auto fitted = fitted_fringe_frequency(times, rho)) {
        table.trailer.emplace_back("fitted_frequency", *fitted);
        table.trailer.emplace_back("fitted_shift_hz", (*fitted - (e_m - e_n)) / (2.0 * std::numbers::pi));
    }
    table.trailer.emplace_back("tau_dec", timescale_cell(decoherence_time(e_m, e_n, params)));
    return table;
}

ResultTable cmd_integrate(const Config& config) {
    config.check_schema({{"deformation", deformation_keys(false), true},
                         {"window", merge({"kind", "amplitude"}, frequency_keys({"e_min", "e_max"})), true},
                         {"sweep", {"t", "beta_values", "beta_start", "beta_stop", "beta_count", "tolerance"}, true},
                         {"output", output_keys, false}});
    output_settings(config);
    const double e_star = config.frequency("deformation", "e_star");
    const WindowProfile profile(parse_window_kind(config), config.frequency("window", "e_min"),
                                config.frequency("window", "e_max"),
                                config.optional_number("window", "amplitude").value_or(1.0));
    const double t = config.number("sweep", "t");
    IntegrationOptions options;
    options.relative_tolerance = config.optional_number("sweep", "tolerance").value_or(1e-10);

    std::vector<double> betas;
    if (config.has("sweep", "beta_values")) {
        if (config.has("sweep", "beta_start") || config.has("sweep", "beta_stop") || config.has("sweep", "beta_count"))
            throw ValidationError(config.source() + ": sweep: give either beta_values or beta_start/beta_stop/beta_count");
        betas = config.numbers("sweep", "beta_values");
    } else {
        const double start = config.number("sweep", "beta_start"), stop = config.number("sweep", "beta_stop");
        const auto count = config.count("sweep", "beta_count");
        if (!(start > 0.0) || !(stop > start) || count < 1)
            throw ValidationError(config.source() + ": sweep: need 0 < beta_start < beta_stop and beta_count >= 1");
        for (std::size_t i = 0; i < count; ++i)
            betas.push_back(count == 1 ? start
                                       : start * std::pow(stop / start, static_cast<double>(i) / static_cast<double>(count - 1)));
    }

    std::optional<DecayFit> fit;
    if (t != 0.0)
        fit = decay_scan(profile, t, e_star, betas, options);
    else
        for (std::size_t i = 0; i < betas.size(); ++i)
            if (!std::isfinite(betas[i]) || (i > 0 && !(betas[i] > betas[i - 1])))
                throw ValidationError(config.source() + ": sweep: beta values must be finite and strictly increasing");

    ResultTable table;
    table.columns = {{"beta", "1"},          {"re_I", "s^-1"}, {"im_I", "s^-1"}, {"abs_I", "s^-1"},
                     {"beta_abs_I", "s^-1"}, {"c", "1"},       {"hypothesis_ok", "1"}};
    for (double beta : betas) {
        const PhaseContext ctx(t, DeformationParams(beta, e_star));
        const DecayPoint* included = nullptr;
        if (fit)
            for (const auto& p : fit->points)
                if (p.beta == beta)
                    included = &p;
        std::complex<double> value;
        double c = 0.0;
        if (included) {
            value = included->value;
            c = included->c;
        } else {
            value = integrate(profile, ctx, options).value;
            c = phase_slope_bound(profile, ctx).c;
        }
        table.add_row({beta, value.real(), value.imag(), std::abs(value), std::abs(beta) * std::abs(value), c,
                       included != nullptr});
    }
    table.trailer.emplace_back("integral_f", profile.integral());
    if (fit && fit->slope) {
        table.trailer.emplace_back("slope", *fit->slope);
        table.trailer.emplace_back("c_fit", fit->c_fit);
        table.trailer.emplace_back("c_bound", fit->c_bound);
        table.trailer.emplace_back("bound_constant", fit->bound_constant);
        table.trailer.emplace_back("beta0", fit->beta0);
    }
    return table;
}

ResultTable cmd_bounds(const Config& config) {
    const auto platform_keys =
        merge({"t2", "log_factor_override", "band_lo", "band_hi"}, frequency_keys({"energy", "delta_e", "e_star"}));
    config.check_schema({{"platform.", platform_keys, false},
                         {"ramsey", frequency_keys({"precision", "e0", "e1", "e_star"}), false},
                         {"output", output_keys, false}});
    output_settings(config);

    std::vector<PlatformSpec> specs;
    std::vector<PlatformError> parse_errors;
    for (const auto& section : config.section_names()) {
        if (section.rfind("platform.", 0) != 0)
            continue;
        PlatformSpec spec;
        spec.name = section.substr(std::string("platform.").size());
        try {
            spec.energy = config.frequency(section, "energy");
            spec.delta_e = config.frequency(section, "delta_e");
            spec.t2 = config.number(section, "t2");
            spec.e_star = config.frequency(section, "e_star");
            spec.log_factor_override = config.optional_number(section, "log_factor_override");
            const bool lo = config.has(section, "band_lo"), hi = config.has(section, "band_hi");
            if (lo != hi)
                throw ValidationError(config.source() + ": " + section + ": band_lo and band_hi go together");
            if (lo)
                spec.expected_band = DecadeBand{static_cast<int>(config.number(section, "band_lo")),
                                                static_cast<int>(config.number(section, "band_hi"))};
            specs.push_back(spec);
        } catch (const ValidationError& e) {
            parse_errors.push_back({spec.name, e.what()});
        }
    }
    std::optional<double> ramsey;
    if (config.has_section("ramsey"))
        ramsey = ramsey_bound(config.frequency("ramsey", "precision"), config.frequency("ramsey", "e0"),
                              config.frequency("ramsey", "e1"), config.frequency("ramsey", "e_star"));

    const auto report = table_report(specs);
    ResultTable table;
    table.columns = {{"platform", "text"},     {"E", "s^-1"},          {"delta_E", "s^-1"},
                     {"T2", "s"},              {"e_star", "s^-1"},     {"log_factor", "1"},
                     {"g_difference", "s^-1"}, {"beta_max", "1"},      {"beta_max_exact", "1"},
                     {"decade", "1"},          {"band_match", "text"}};
    for (const auto& r : report.results) {
        std::string match = "n/a";
        if (r.band_match)
            match = *r.band_match ? "yes" : "no";
        table.add_row({r.name, r.spec.energy, r.spec.delta_e, r.spec.t2, r.spec.e_star, r.log_factor, r.g_difference,
                       r.beta_max, r.beta_max_exact, static_cast<std::int64_t>(r.decade), match});
    }
    for (const auto& e : parse_errors)
        table.errors.push_back(e.name + ": " + e.message);
    for (const auto& e : report.errors)
        table.errors.push_back(e.name + ": " + e.message);
    if (ramsey) {
        table.trailer.emplace_back("ramsey_beta_bound", *ramsey);
        table.trailer.emplace_back("ramsey_decade", static_cast<std::int64_t>(decade_of(*ramsey)));
    }
    return table;
}

ResultTable cmd_fit(const Config& config, std::optional<std::uint64_t> seed_override) {
    config.check_schema({{"fit", merge({"trace", "envelope", "t2", "t_min", "t_max"}, frequency_keys({"e_m", "e_n", "e_star"})), true},
                         {"synthesize", {"gamma", "t_stop", "t_count", "noise", "seed", "write_trace"}, false},
                         {"output", output_keys, false}});
    output_settings(config);
    const EnvelopeModel envelope(parse_envelope_kind(config, "fit"), config.number("fit", "t2"));
    const double e_m = config.frequency("fit", "e_m"), e_n = config.frequency("fit", "e_n");
    const double e_star = config.frequency("fit", "e_star");
    const bool from_file = config.has("fit", "trace");
    if (from_file == config.has_section("synthesize"))
        throw ValidationError(config.source() + ": give exactly one of fit.trace or a [synthesize] section");

    CoherenceTrace trace;
    if (from_file) {
        auto cols = read_trace_csv(config.resolve(config.text("fit", "trace")));
        trace = {std::move(cols.t), std::move(cols.coherence)};
    } else {
        const double gamma = config.number("synthesize", "gamma");
        const double t_stop = config.number("synthesize", "t_stop");
        const auto count = config.count("synthesize", "t_count");
        if (!(t_stop > 0.0) || count < 3)
            throw ValidationError(config.source() + ": synthesize: need t_stop > 0 and t_count >= 3");
        const double noise = config.optional_number("synthesize", "noise").value_or(0.0);
        std::uint64_t seed = config.has("synthesize", "seed") ? config.unsigned_integer("synthesize", "seed") : 0;
        if (seed_override)
            seed = *seed_override;
        const auto grid = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(count),
                                                     t_stop / static_cast<double>(count), t_stop);
        trace = synthesize_trace(envelope, gamma, grid, noise, seed);
    }
    FitWindow window;
    window.t_min = config.optional_number("fit", "t_min").value_or(window.t_min);
    window.t_max = config.optional_number("fit", "t_max").value_or(window.t_max);
    const auto fit = fit_residual_envelope(trace, envelope, e_m, e_n, e_star, window);
    // written only once the fit has succeeded
    if (const auto path = config.optional_text("synthesize", "write_trace")) {
        std::ofstream out(config.resolve(*path));
        if (!out)
            throw ValidationError("cannot write trace file " + config.resolve(*path).string());
        write_trace_csv(out, trace.t, trace.coherence);
    }

    ResultTable table;
    table.columns = {{"mode", "text"},        {"gamma_fit", "s^-1"},   {"gamma_raw", "s^-1"}, {"gamma_stderr", "s^-1"},
                     {"gamma_upper", "s^-1"}, {"beta_inferred", "1"},  {"beta_stderr", "1"},  {"beta_upper", "1"},
                     {"tau_dec", "s"},        {"clamped", "1"},        {"points_used", "1"},  {"residual_norm", "1"}};
    const std::optional<double> tau = fit.gamma_fit > 0.0 ? std::optional<double>(1.0 / fit.gamma_fit) : std::nullopt;
    table.add_row({std::string(fit.significant ? "measurement" : "bound_only"), fit.gamma_fit, fit.gamma_raw,
                   fit.gamma_stderr, fit.gamma_upper, fit.beta_inferred, fit.beta_stderr, fit.beta_upper,
                   timescale_cell(tau), fit.clamped, static_cast<std::int64_t>(fit.points_used), fit.residual_norm});
    return table;
}

ResultTable run_command(const std::string& name, const Config& config, std::optional<std::uint64_t> seed_override) {
    if (name == "deform")
        return cmd_deform(config);
    if (name == "evolve")
        return cmd_evolve(config);
    if (name == "integrate")
        return cmd_integrate(config);
    if (name == "bounds")
        return cmd_bounds(config);
    if (name == "fit")
        return cmd_fit(config, seed_override);
    throw ValidationError("unknown command '" + name + "'");
}

std::filesystem::path shipped_config_dir() {
#ifdef LSD_CONFIG_DIR
    return LSD_CONFIG_DIR;
#else
    return "configs";
#endif
}

std::vector<ShippedExample> shipped_examples() {
    return {
        {"two_level.cfg", "deform", "qubit at 5 / 5.1 GHz, E* = 1 GHz: G(E) and F(E) per level"},
        {"two_level_evolve.cfg", "evolve", "equal superposition, beta = 1e-6: rho_12(t) and the fringe shift"},
        {"quartic.cfg", "deform", "quartic oscillator, 60 levels, E_n ~ kappa n^(4/3) fit"},
        {"frw.cfg", "deform", "FRW minisuperspace, anharmonic scale-factor potential"},
        {"schwarzschild.cfg", "deform", "Schwarzschild-interior toy potential -alpha/x^2 + beta1 x^2"},
        {"decay_scan.cfg", "integrate", "raised-cosine window on [2E*, 4E*], t = 1/E*, beta = 10..1e4"},
        {"superconducting.cfg", "bounds", "superconducting-qubit benchmark, T2 = 100 us, log factor 20"},
        {"table1.cfg", "bounds", "four representative platforms with their reference decade bands"},
        {"ramsey_protocol.cfg", "bounds", "Ramsey protocol: 1 Hz precision against a GHz-scale G difference"},
        {"envelope_fit.cfg", "fit", "synthesized coherence trace with 1% noise, residual-envelope fit"},
    };
}

} // namespace lsd
