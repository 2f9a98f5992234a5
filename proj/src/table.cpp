#include "vilenkin/table.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace vilenkin {

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("ResultTable: no columns");
}

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("ResultTable: row width mismatch");
    rows_.push_back(std::move(row));
}

void ResultTable::set_meta(const std::string& key, const std::string& value) {
    meta_[key] = value;
}

std::string ResultTable::format_cell(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", *d);
        return buf;
    }
    return std::get<std::string>(c);
}

void ResultTable::write_csv(std::ostream& out) const {
    for (const auto& [k, v] : meta_)
        if (k != "wall_ms") out << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
    for (const auto& row : rows_)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_cell(row[i]) << (i + 1 < row.size() ? "," : "\n");
}

void ResultTable::write_json(std::ostream& out) const {
    nlohmann::json j;
    j["meta"] = meta_;
    j["columns"] = columns_;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& cell : row) {
            if (const auto* i = std::get_if<std::int64_t>(&cell)) jr.push_back(*i);
            else if (const auto* d = std::get_if<double>(&cell)) jr.push_back(*d);
            else jr.push_back(std::get<std::string>(cell));
        }
        j["rows"].push_back(std::move(jr));
    }
    out << j.dump(2) << "\n";
}

}  // namespace vilenkin
