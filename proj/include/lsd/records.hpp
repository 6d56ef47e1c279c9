// records.hpp - column-oriented result tables and their CSV / JSON forms
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace lsd {

// Marker for an infinite timescale: "inf" in CSV, null plus "<column>_infinite": true in JSON.
struct Infinite {
    bool operator==(const Infinite&) const = default;
};

using Cell = std::variant<double, std::int64_t, bool, std::string, Infinite>;

struct Column {
    std::string name;
    std::string unit; // "1" for dimensionless
};

struct ResultTable {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> trailer;
    std::vector<std::string> errors;

    void add_row(std::vector<Cell> row);
};

inline constexpr int default_precision = 17;

// Header cells are "name[unit]"; trailer and error lines follow the data as '#' comments.
void write_csv(std::ostream& out, const ResultTable& table, int precision = default_precision);
void write_json(std::ostream& out, const ResultTable& table, int precision = default_precision);

std::string format_number(double value, int precision = default_precision);

struct CsvData {
    std::string source;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> lines; // source line of each row
    std::size_t header_line{1};

    // Numeric value of a cell ("inf" accepted); throws with line and column otherwise.
    [[nodiscard]] double number(std::size_t row, std::size_t column) const;
    [[nodiscard]] std::size_t column(const std::string& name) const; // matches "name" or "name[unit]"
};

// CSV reader: '#' lines skipped, ragged rows rejected with their line number.
CsvData read_csv(std::istream& in, const std::string& source = "<csv>");

struct TraceColumns {
    Eigen::VectorXd t;
    Eigen::VectorXd coherence;
};

// Coherence trace with columns t_seconds, coherence.
TraceColumns read_trace_csv(const std::filesystem::path& path);
void write_trace_csv(std::ostream& out, const Eigen::VectorXd& t, const Eigen::VectorXd& coherence,
                     int precision = default_precision);

} // namespace lsd
