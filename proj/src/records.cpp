#include "lsd/records.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lsd/config.hpp"
#include "lsd/errors.hpp"

namespace lsd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string csv_cell(const Cell& cell, int precision) {
    return std::visit(overloaded{
                          [&](double v) { return format_number(v, precision); },
                          [](std::int64_t v) { return std::to_string(v); },
                          [](bool v) { return std::string(v ? "true" : "false"); },
                          [](const std::string& v) { return v; },
                          [](Infinite) { return std::string("inf"); },
                      },
                      cell);
}

double rounded(double v, int precision) {
    if (!std::isfinite(v) || precision >= 17)
        return v;
    return std::strtod(format_number(v, precision).c_str(), nullptr);
}

nlohmann::json json_cell(const Cell& cell, int precision) {
    return std::visit(overloaded{
                          [&](double v) -> nlohmann::json {
                              if (!std::isfinite(v))
                                  return nullptr;
                              return rounded(v, precision);
                          },
                          [](std::int64_t v) -> nlohmann::json { return v; },
                          [](bool v) -> nlohmann::json { return v; },
                          [](const std::string& v) -> nlohmann::json { return v; },
                          [](Infinite) -> nlohmann::json { return nullptr; },
                      },
                      cell);
}

} // namespace

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::logic_error("result row has " + std::to_string(row.size()) + " cells for " +
                               std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::string format_number(double value, int precision) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

void write_csv(std::ostream& out, const ResultTable& table, int precision) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i].name << '[' << table.columns[i].unit << ']';
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_cell(row[i], precision);
        out << '\n';
    }
    for (const auto& [key, value] : table.trailer)
        out << "# " << key << '=' << csv_cell(value, precision) << '\n';
    for (const auto& e : table.errors)
        out << "# error: " << e << '\n';
}

void write_json(std::ostream& out, const ResultTable& table, int precision) {
    nlohmann::ordered_json doc;
    doc["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : table.columns)
        doc["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i].name] = json_cell(row[i], precision);
            if (std::holds_alternative<Infinite>(row[i]))
                obj[table.columns[i].name + "_infinite"] = true;
        }
        doc["rows"].push_back(std::move(obj));
    }
    nlohmann::ordered_json trailer = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.trailer) {
        trailer[key] = json_cell(value, precision);
        if (std::holds_alternative<Infinite>(value))
            trailer[key + "_infinite"] = true;
    }
    doc["trailer"] = std::move(trailer);
    doc["errors"] = table.errors;
    out << doc.dump(2) << '\n';
}

double CsvData::number(std::size_t row, std::size_t col) const {
    const auto value = parse_double(cells.at(row).at(col));
    if (!value)
        throw ValidationError(source + ":" + std::to_string(lines.at(row)) + ": column " + std::to_string(col + 1) +
                              " (" + header.at(col) + "): '" + cells[row][col] + "' is not a number");
    return *value;
}

std::size_t CsvData::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name || header[i].rfind(name + "[", 0) == 0)
            return i;
    throw ValidationError(source + ":" + std::to_string(header_line) + ": missing column '" + name + "'");
}

CsvData read_csv(std::istream& in, const std::string& source) {
    CsvData data;
    data.source = source;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (line.back() == ',')
            cells.emplace_back();
        if (!have_header) {
            data.header = std::move(cells);
            data.header_line = line_no;
            have_header = true;
            continue;
        }
        if (cells.size() != data.header.size())
            throw ValidationError(source + ":" + std::to_string(line_no) + ": expected " +
                                  std::to_string(data.header.size()) + " columns, found " +
                                  std::to_string(cells.size()));
        data.cells.push_back(std::move(cells));
        data.lines.push_back(line_no);
    }
    if (!have_header)
        throw ValidationError(source + ": missing header row");
    return data;
}

TraceColumns read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open trace file " + path.string());
    const auto data = read_csv(in, path.string());
    const std::size_t ti = data.column("t_seconds"), ci = data.column("coherence");
    const auto rows = static_cast<Eigen::Index>(data.cells.size());
    TraceColumns trace{Eigen::VectorXd(rows), Eigen::VectorXd(rows)};
    for (std::size_t r = 0; r < data.cells.size(); ++r) {
        trace.t(static_cast<Eigen::Index>(r)) = data.number(r, ti);
        trace.coherence(static_cast<Eigen::Index>(r)) = data.number(r, ci);
    }
    return trace;
}

void write_trace_csv(std::ostream& out, const Eigen::VectorXd& t, const Eigen::VectorXd& coherence, int precision) {
    out << "t_seconds,coherence\n";
    for (Eigen::Index i = 0; i < t.size(); ++i)
        out << format_number(t(i), precision) << ',' << format_number(coherence(i), precision) << '\n';
}

} // namespace lsd
