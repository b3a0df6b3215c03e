#pragma once

// Columnar result tables with deterministic CSV (RFC 4180) and JSON
// emission. Floats are printed as shortest round-trip decimals so emitted
// files are byte-stable and parse back bit-for-bit.

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace entdyn {

struct ResultTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values;  // one vector per column, equal lengths

    size_t rows() const { return values.empty() ? 0 : values.front().size(); }
    void add_column(std::string name);
    void push_row(std::span<const double> row);
};

enum class EmitFormat { csv, json };

std::string format_double(double v);

// CSV carries the header row and data only; metadata lives in the JSON form.
std::string to_csv(const ResultTable& table);
std::string to_json(const ResultTable& table);

// Writes the table in the given format; returns the path written.
std::string emit(const ResultTable& table, EmitFormat format, const std::string& path);

}  // namespace entdyn
