#include "lsd/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "lsd/errors.hpp"
#include "lsd/platform_constraints.hpp"

namespace lsd {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(trim(item));
    return out;
}

} // namespace

std::optional<double> parse_double(const std::string& token) {
    const std::string t = trim(token);
    if (t.empty())
        return std::nullopt;
    if (t == "inf" || t == "+inf")
        return std::numeric_limits<double>::infinity();
    if (t == "-inf")
        return -std::numeric_limits<double>::infinity();
    const char* begin = t.data();
    if (*begin == '+')
        ++begin;
    double value = 0;
    const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size())
        return std::nullopt;
    return value;
}

std::set<std::string> frequency_keys(std::initializer_list<std::string> bases) {
    std::set<std::string> keys;
    for (const auto& b : bases) {
        keys.insert(b);
        keys.insert(b + "_hz");
    }
    return keys;
}

bool SectionSchema::matches(const std::string& section) const {
    if (!name.empty() && name.back() == '.')
        return section.size() > name.size() && section.compare(0, name.size(), name) == 0;
    return section == name;
}

Config Config::parse(std::istream& in, const std::string& source) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ValidationError(source + ":" + std::to_string(e.line()) + ": " + e.message());
    }
    Config cfg;
    cfg.source_ = source;
    for (const auto& [name, child] : tree) {
        if (child.empty())
            throw ValidationError(source + ": key '" + name + "' appears outside any [section]");
        Section section;
        for (const auto& [key, leaf] : child)
            section.emplace(key, leaf.data());
        cfg.sections_.emplace_back(name, std::move(section));
    }
    return cfg;
}

Config Config::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open config file " + path.string());
    auto cfg = parse(in, path.string());
    cfg.base_dir_ = path.parent_path();
    return cfg;
}

bool Config::has_section(const std::string& section) const {
    for (const auto& [name, _] : sections_)
        if (name == section)
            return true;
    return false;
}

bool Config::has(const std::string& section, const std::string& key) const { return find(section, key) != nullptr; }

std::vector<std::string> Config::section_names() const {
    std::vector<std::string> names;
    for (const auto& [name, _] : sections_)
        names.push_back(name);
    return names;
}

void Config::check_schema(const std::vector<SectionSchema>& schema) const {
    for (const auto& [name, section] : sections_) {
        const SectionSchema* match = nullptr;
        for (const auto& s : schema)
            if (s.matches(name))
                match = &s;
        if (!match)
            throw ValidationError(source_ + ": unknown section [" + name + "]");
        for (const auto& [key, _] : section)
            if (!match->keys.contains(key))
                throw ValidationError(source_ + ": unknown key '" + name + "." + key + "'");
    }
    for (const auto& s : schema)
        if (s.required && !has_section(s.name))
            throw ValidationError(source_ + ": missing required section [" + s.name + "]");
}

const std::string* Config::find(const std::string& section, const std::string& key) const {
    for (const auto& [name, values] : sections_) {
        if (name != section)
            continue;
        const auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    }
    return nullptr;
}

void Config::fail(const std::string& section, const std::string& key, const std::string& why) const {
    throw ValidationError(source_ + ": " + section + "." + key + ": " + why);
}

std::string Config::text(const std::string& section, const std::string& key) const {
    const auto* v = find(section, key);
    if (!v)
        fail(section, key, "required key is missing");
    return *v;
}

std::optional<std::string> Config::optional_text(const std::string& section, const std::string& key) const {
    const auto* v = find(section, key);
    return v ? std::optional<std::string>(*v) : std::nullopt;
}

double Config::number(const std::string& section, const std::string& key) const {
    const auto value = parse_double(text(section, key));
    if (!value || !std::isfinite(*value))
        fail(section, key, "expected a finite number, got '" + text(section, key) + "'");
    return *value;
}

std::optional<double> Config::optional_number(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        return std::nullopt;
    return number(section, key);
}

std::uint64_t Config::unsigned_integer(const std::string& section, const std::string& key) const {
    const std::string raw = trim(text(section, key));
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (raw.empty() || ec != std::errc() || ptr != raw.data() + raw.size())
        fail(section, key, "expected a non-negative integer, got '" + raw + "'");
    return value;
}

std::size_t Config::count(const std::string& section, const std::string& key) const {
    return static_cast<std::size_t>(unsigned_integer(section, key));
}

std::optional<std::size_t> Config::optional_count(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        return std::nullopt;
    return count(section, key);
}

std::vector<double> Config::numbers(const std::string& section, const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : split_list(text(section, key))) {
        const auto value = parse_double(item);
        if (!value || !std::isfinite(*value))
            fail(section, key, "expected a comma-separated list of finite numbers, bad entry '" + item + "'");
        out.push_back(*value);
    }
    return out;
}

std::optional<double> Config::optional_frequency(const std::string& section, const std::string& base) const {
    const bool angular = has(section, base), hz = has(section, base + "_hz");
    if (angular && hz)
        fail(section, base, "give either '" + base + "' (s^-1) or '" + base + "_hz' (Hz), not both");
    if (angular)
        return number(section, base);
    if (hz)
        return hz_to_angular(number(section, base + "_hz"));
    return std::nullopt;
}

double Config::frequency(const std::string& section, const std::string& base) const {
    const auto value = optional_frequency(section, base);
    if (!value)
        fail(section, base, "required key is missing (or '" + base + "_hz')");
    return *value;
}

std::vector<double> Config::frequencies(const std::string& section, const std::string& base) const {
    const bool angular = has(section, base), hz = has(section, base + "_hz");
    if (angular == hz)
        fail(section, base, "give exactly one of '" + base + "' (s^-1) or '" + base + "_hz' (Hz)");
    if (angular)
        return numbers(section, base);
    auto values = numbers(section, base + "_hz");
    for (auto& v : values)
        v = hz_to_angular(v);
    return values;
}

std::filesystem::path Config::resolve(const std::string& relative) const {
    const std::filesystem::path p(relative);
    return p.is_absolute() ? p : base_dir_ / p;
}

} // namespace lsd
