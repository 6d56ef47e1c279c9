// lsd-lab - command-line front end for the logarithmic spectral deformation lab
//
//   lsd-lab <deform|evolve|integrate|bounds|fit> --config <path> [--format csv|json] [--out <path>] [--seed <u64>]
//   lsd-lab examples [--out <dir>]
//
// Exit codes: 0 success, 1 validation error, 2 numerical failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lsd/commands.hpp"
#include "lsd/errors.hpp"

namespace {

int list_or_copy_examples(const std::optional<std::string>& out_dir) {
    const auto dir = lsd::shipped_config_dir();
    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        for (const auto& ex : lsd::shipped_examples())
            std::filesystem::copy_file(dir / ex.file, std::filesystem::path(*out_dir) / ex.file,
                                       std::filesystem::copy_options::overwrite_existing);
        std::cerr << "copied " << lsd::shipped_examples().size() << " configs to " << *out_dir << '\n';
        return 0;
    }
    for (const auto& ex : lsd::shipped_examples())
        std::cout << ex.command << '\t' << (dir / ex.file).string() << '\t' << ex.description << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lsd-lab: logarithmic spectral deformation laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> format;
    std::optional<std::string> out_path;
    std::optional<std::uint64_t> seed;

    for (const char* name : {"deform", "evolve", "integrate", "bounds", "fit"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "run configuration (INI)")->required();
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--seed", seed, "RNG seed for synthesized traces");
    }
    auto* examples = app.add_subcommand("examples", "list the shipped configs, or copy them with --out");
    examples->add_option("--out", out_path, "directory to copy the configs into");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (examples->parsed())
            return list_or_copy_examples(out_path);

        const auto* sub = app.get_subcommands().front();
        const auto config = lsd::Config::load(config_path);
        auto settings = lsd::output_settings(config);
        if (format)
            settings.format = lsd::parse_output_format(*format);
        if (out_path)
            settings.path = *out_path;

        const auto table = lsd::run_command(sub->get_name(), config, seed);

        std::ostringstream buffer;
        if (settings.format == lsd::OutputFormat::json)
            lsd::write_json(buffer, table, settings.precision);
        else
            lsd::write_csv(buffer, table, settings.precision);
        for (const auto& e : table.errors)
            std::cerr << "lsd-lab: " << e << '\n';

        if (settings.path) {
            std::ofstream out(*settings.path, std::ios::binary);
            if (!out) {
                std::cerr << "lsd-lab: cannot write " << settings.path->string() << '\n';
                return 1;
            }
            out << buffer.str();
            std::cerr << "lsd-lab: wrote " << table.rows.size() << " records to " << settings.path->string() << '\n';
        } else {
            std::cout << buffer.str();
        }
        return 0;
    } catch (const lsd::ValidationError& e) {
        std::cerr << "lsd-lab: validation error: " << e.what() << '\n';
        return 1;
    } catch (const lsd::NumericalError& e) {
        std::cerr << "lsd-lab: numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lsd-lab: " << e.what() << '\n';
        return 1;
    }
}
