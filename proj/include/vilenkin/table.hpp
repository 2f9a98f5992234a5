#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace vilenkin {

/// Rectangular result table with typed cells and run metadata. CSV output
/// is deterministic: fixed 12-significant-digit float formatting, '\n' line
/// endings, '.' decimal separator.
class ResultTable {
public:
    using Cell = std::variant<std::int64_t, double, std::string>;

    explicit ResultTable(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);
    void set_meta(const std::string& key, const std::string& value);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    const std::map<std::string, std::string>& meta() const noexcept { return meta_; }

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;

    static std::string format_cell(const Cell& c);

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
    std::map<std::string, std::string> meta_;
};

}  // namespace vilenkin
