#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace zpr::cli {

using Cell = std::variant<double, long, std::string>;

struct Column {
    std::string name;
    std::string unit;  // empty for dimensionless
};

// Self-describing result table: metadata preamble, named columns with units, rows.
struct Table {
    std::string command;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    int flagged_rows = 0;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void add_row(std::vector<Cell> row, bool flagged = false);
};

// '#'-prefixed key: value lines, then a header row and comma-separated rows.
void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

std::string format_double(double v);

}  // namespace zpr::cli
