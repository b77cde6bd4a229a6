#include "sprompt/table.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sprompt/answer.hpp"

namespace sprompt {

const char* column_type_name(ColumnType t) {
    switch (t) {
    case ColumnType::text: return "text";
    case ColumnType::number: return "number";
    case ColumnType::date: return "date";
    }
    return "?";
}

std::optional<size_t> Table::column_index(const std::string& header) const {
    for (size_t i = 0; i < headers.size(); ++i)
        if (headers[i] == header) return i;
    return std::nullopt;
}

std::vector<ColumnType> infer_column_types(const Table& t) {
    std::vector<ColumnType> types;
    for (size_t c = 0; c < t.width(); ++c) {
        size_t non_empty = 0, dates = 0, numbers = 0;
        for (const auto& row : t.rows) {
            const std::string cell = trim(row[c]);
            if (cell.empty()) continue;
            ++non_empty;
            if (parse_date(cell)) ++dates;
            if (parse_quantity(cell)) ++numbers;
        }
        if (non_empty > 0 && dates == non_empty)
            types.push_back(ColumnType::date);
        else if (non_empty > 0 && numbers * 10 >= non_empty * 9)
            types.push_back(ColumnType::number);
        else
            types.push_back(ColumnType::text);
    }
    return types;
}

namespace {

std::vector<std::string> split_delimited_line(const std::string& line, char sep,
                                              size_t line_no) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == sep) {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw MalformedTableError("unterminated quote at line " + std::to_string(line_no));
    cells.push_back(trim(cur));
    return cells;
}

Table table_from_json_record(const nlohmann::json& j) {
    Table t;
    t.id = j.value("id", std::string{"table"});
    t.headers = j.at("headers").get<std::vector<std::string>>();
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    for (size_t r = 0; r < t.rows.size(); ++r)
        if (t.rows[r].size() != t.headers.size())
            throw MalformedTableError("table '" + t.id + "': row " + std::to_string(r + 1) +
                                      " has " + std::to_string(t.rows[r].size()) +
                                      " cells, expected " + std::to_string(t.headers.size()));
    if (j.contains("column_types")) {
        for (const auto& name : j.at("column_types")) {
            const std::string n = name.get<std::string>();
            if (n == "text") t.column_types.push_back(ColumnType::text);
            else if (n == "number") t.column_types.push_back(ColumnType::number);
            else if (n == "date") t.column_types.push_back(ColumnType::date);
            else throw MalformedTableError("table '" + t.id + "': unknown column type " + n);
        }
        if (t.column_types.size() != t.headers.size())
            throw MalformedTableError("table '" + t.id + "': column_types length mismatch");
    } else {
        t.column_types = infer_column_types(t);
    }
    return t;
}

bool has_json_extension(const std::string& path) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return false;
    std::string ext = to_lower(path.substr(dot));
    return ext == ".json" || ext == ".jsonl";
}

}  // namespace

Table parse_delimited_table(const std::string& content, const std::string& id) {
    std::istringstream in(content);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!trim(line).empty()) lines.push_back(line);
    }
    if (lines.empty())
        throw MalformedTableError("table '" + id + "': no header row");

    char sep = lines[0].find('\t') != std::string::npos ? '\t' : ',';
    Table t;
    t.id = id;
    t.headers = split_delimited_line(lines[0], sep, 1);
    if (t.headers.empty() || (t.headers.size() == 1 && t.headers[0].empty()))
        throw MalformedTableError("table '" + id + "': empty header row");
    for (size_t i = 1; i < lines.size(); ++i) {
        auto cells = split_delimited_line(lines[i], sep, i + 1);
        if (cells.size() != t.headers.size())
            throw MalformedTableError("table '" + id + "': row " + std::to_string(i) + " has " +
                                      std::to_string(cells.size()) + " cells, expected " +
                                      std::to_string(t.headers.size()));
        t.rows.push_back(std::move(cells));
    }
    t.column_types = infer_column_types(t);
    return t;
}

std::vector<Table> load_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw MalformedTableError("cannot open table file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.rfind('.');
    std::string stem = dot == std::string::npos ? base : base.substr(0, dot);

    std::vector<Table> tables;
    if (has_json_extension(path)) {
        std::istringstream lines(content);
        std::string line;
        size_t n = 0;
        while (std::getline(lines, line)) {
            if (trim(line).empty()) continue;
            ++n;
            try {
                tables.push_back(table_from_json_record(nlohmann::json::parse(line)));
            } catch (const nlohmann::json::exception& e) {
                throw MalformedTableError(path + " record " + std::to_string(n) + ": " +
                                          e.what());
            }
        }
        if (tables.empty())
            throw MalformedTableError(path + ": no table records");
    } else {
        tables.push_back(parse_delimited_table(content, stem));
    }
    return tables;
}

Table load_table(const std::string& path) {
    return load_tables(path).front();
}

}  // namespace sprompt
