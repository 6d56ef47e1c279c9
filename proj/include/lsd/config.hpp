// config.hpp - strict sectioned key = value run configuration
//
// Syntax (INI):
//   # comment lines start with '#' or ';'
//   [section]
//   key = value
// Lists are comma separated. Sections without keys are ignored. Frequency-valued keys accept either the angular
// form (key, s^-1) or the ordinary-frequency form (key_hz, converted by 2 pi).
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lsd {

struct SectionSchema {
    std::string name;           // exact name, or a prefix ending in '.' (e.g. "platform.")
    std::set<std::string> keys; // allowed keys
    bool required{false};

    [[nodiscard]] bool matches(const std::string& section) const;
};

class Config {
public:
    using Section = std::map<std::string, std::string>;

    static Config parse(std::istream& in, const std::string& source = "<config>");
    static Config load(const std::filesystem::path& path);

    [[nodiscard]] bool has_section(const std::string& section) const;
    [[nodiscard]] bool has(const std::string& section, const std::string& key) const;
    [[nodiscard]] std::vector<std::string> section_names() const;

    // Rejects unknown sections and keys, and missing required sections.
    void check_schema(const std::vector<SectionSchema>& schema) const;

    [[nodiscard]] std::string text(const std::string& section, const std::string& key) const;
    [[nodiscard]] std::optional<std::string> optional_text(const std::string& section, const std::string& key) const;
    [[nodiscard]] double number(const std::string& section, const std::string& key) const;
    [[nodiscard]] std::optional<double> optional_number(const std::string& section, const std::string& key) const;
    [[nodiscard]] std::size_t count(const std::string& section, const std::string& key) const;
    [[nodiscard]] std::optional<std::size_t> optional_count(const std::string& section, const std::string& key) const;
    [[nodiscard]] std::uint64_t unsigned_integer(const std::string& section, const std::string& key) const;
    [[nodiscard]] std::vector<double> numbers(const std::string& section, const std::string& key) const;

    // `base` in s^-1 or `base_hz` in Hz (exactly one must be present).
    [[nodiscard]] double frequency(const std::string& section, const std::string& base) const;
    [[nodiscard]] std::optional<double> optional_frequency(const std::string& section, const std::string& base) const;
    [[nodiscard]] std::vector<double> frequencies(const std::string& section, const std::string& base) const;

    // Resolves a path relative to the config file's directory.
    [[nodiscard]] std::filesystem::path resolve(const std::string& relative) const;

    [[nodiscard]] const std::string& source() const { return source_; }

private:
    const std::string* find(const std::string& section, const std::string& key) const;
    [[noreturn]] void fail(const std::string& section, const std::string& key, const std::string& why) const;

    std::string source_;
    std::filesystem::path base_dir_;
    std::vector<std::pair<std::string, Section>> sections_;
};

// Parses a full string as a double; nullopt on trailing junk or empty input.
std::optional<double> parse_double(const std::string& token);

// Frequency key pair helper for schemas: {base, base_hz}.
std::set<std::string> frequency_keys(std::initializer_list<std::string> bases);

} // namespace lsd
