// commands.hpp - lsd-lab subcommands: config in, ResultTable out
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lsd/config.hpp"
#include "lsd/hamiltonian_models.hpp"
#include "lsd/records.hpp"
#include "lsd/spectral_core.hpp"

namespace lsd {

enum class OutputFormat { csv, json };

struct OutputSettings {
    OutputFormat format{OutputFormat::csv};
    std::optional<std::filesystem::path> path;
    int precision{default_precision};
};

OutputFormat parse_output_format(const std::string& name);
OutputSettings output_settings(const Config& config);

struct ModelSpectrum {
    std::string kind;
    Spectrum spectrum;
    std::optional<PowerLawFit> fit; // quartic only
};

// Builds the spectrum described by the [model] (and [grid]) sections.
ModelSpectrum build_model_spectrum(const Config& config);

// Each command checks the full schema before computing anything.
ResultTable cmd_deform(const Config& config);
ResultTable cmd_evolve(const Config& config);
ResultTable cmd_integrate(const Config& config);
ResultTable cmd_bounds(const Config& config);
ResultTable cmd_fit(const Config& config, std::optional<std::uint64_t> seed_override = std::nullopt);

// Dispatch by subcommand name (deform, evolve, integrate, bounds, fit).
ResultTable run_command(const std::string& name, const Config& config,
                        std::optional<std::uint64_t> seed_override = std::nullopt);

struct ShippedExample {
    std::string file;
    std::string command;
    std::string description;
};

std::filesystem::path shipped_config_dir();
std::vector<ShippedExample> shipped_examples();

} // namespace lsd
