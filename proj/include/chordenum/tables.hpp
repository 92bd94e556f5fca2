#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chordenum {

/// A row of one quantity across the column range. Cells hold integers or
/// "p/q" rationals; the core table also carries addend strings.
struct TableRow {
    std::string quantity;
    std::string method;  ///< which computation produced the row
    std::vector<std::string> cells;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Table {
    std::string id;
    int L = 12;
    std::string column_label = "n";
    std::vector<std::string> columns;
    std::vector<TableRow> rows;

    friend bool operator==(const Table&, const Table&) = default;

    /// Row with the given quantity name, or nullptr.
    const TableRow* find(std::string_view quantity) const;
};

inline constexpr std::string_view kVersion = "1.0.0";

/// scale, repN, repn, TTI, core, poli, face.
const std::vector<std::string>& table_ids();

/// Builds a table for temperament L; throws UnknownTable.
Table build_table(std::string_view id, int L);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);
Table table_from_json(const std::string& text);

} // namespace chordenum
