#include "entdyn/result_table.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace entdyn {

void ResultTable::add_column(std::string name) {
    if (rows() != 0) throw std::logic_error("ResultTable: add columns before pushing rows");
    columns.push_back(std::move(name));
    values.emplace_back();
}

void ResultTable::push_row(std::span<const double> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("ResultTable::push_row: row width must match column count");
    for (size_t c = 0; c < row.size(); ++c) values[c].push_back(row[c]);
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const ResultTable& table) {
    std::string out;
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += csv_quote(table.columns[c]);
    }
    out += '\n';
    const size_t n = table.rows();
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out += ',';
            out += format_double(table.values[c][r]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const ResultTable& table) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
    nlohmann::ordered_json cols = nlohmann::ordered_json::object();
    for (size_t c = 0; c < table.columns.size(); ++c) cols[table.columns[c]] = table.values[c];
    j["columns"] = std::move(cols);
    return j.dump(2) + "\n";
}

std::string emit(const ResultTable& table, EmitFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot open for writing: " + path);
    out << (format == EmitFormat::csv ? to_csv(table) : to_json(table));
    out.flush();
    if (!out) throw std::runtime_error("emit: write failed: " + path);
    return path;
}

}  // namespace entdyn
