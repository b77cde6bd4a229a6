#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sprompt/dates.hpp"

namespace sprompt {

enum class ColumnType { text, number, date };

const char* column_type_name(ColumnType t);

struct MalformedTableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A typed semi-structured table: header row, per-column types, string cells.
struct Table {
    std::string id;
    std::vector<std::string> headers;
    std::vector<ColumnType> column_types;
    std::vector<std::vector<std::string>> rows;

    size_t width() const { return headers.size(); }
    const std::string& cell(size_t row, size_t col) const { return rows[row][col]; }
    std::optional<size_t> column_index(const std::string& header) const;
};

// A column is typed date when every non-empty cell matches a date pattern,
// number when at least 90% of non-empty cells parse as quantities, else text.
std::vector<ColumnType> infer_column_types(const Table& t);

// Parses tab- or comma-separated text with a header row. The separator is
// taken from the header line (tab when present, else comma); CSV fields may
// be double-quoted. Throws MalformedTableError with a row/column location.
Table parse_delimited_table(const std::string& content, const std::string& id);

// Loads a table file: ".json"/".jsonl" files hold one JSON record per line
// ({"id","headers","rows"[,"column_types"]}), anything else is delimited
// text. A jsonl file may hold several tables; this reads the first.
Table load_table(const std::string& path);

// All tables in a file (each line of a jsonl, or the single delimited table).
std::vector<Table> load_tables(const std::string& path);

}  // namespace sprompt
