#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace zpr::cli {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Table::set(const std::string& key, const std::string& value)
{
    for (auto& kv : meta) {
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    }
    meta.emplace_back(key, value);
}

void Table::set(const std::string& key, double value) { set(key, format_double(value)); }

void Table::add_row(std::vector<Cell> row, bool flagged)
{
    if (row.size() != columns.size())
        throw std::logic_error("row width " + std::to_string(row.size()) + " != " + std::to_string(columns.size()));
    rows.push_back(std::move(row));
    flagged_rows += flagged ? 1 : 0;
}

namespace {

std::string cell_text(const Cell& c)
{
    if (auto d = std::get_if<double>(&c))
        return format_double(*d);
    if (auto l = std::get_if<long>(&c))
        return std::to_string(*l);
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const Table& t)
{
    os << "# command: " << t.command << "\n";
    for (const auto& [k, v] : t.meta) {
        if (v.find('\n') == std::string::npos) {
            os << "# " << k << ": " << v << "\n";
            continue;
        }
        os << "# " << k << ":\n";
        std::size_t pos = 0;
        while (pos < v.size()) {
            std::size_t end = v.find('\n', pos);
            if (end == std::string::npos)
                end = v.size();
            if (end > pos)
                os << "#   " << v.substr(pos, end - pos) << "\n";
            pos = end + 1;
        }
    }
    os << "# flagged_rows: " << t.flagged_rows << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i)
            os << ",";
        os << t.columns[i].name;
        if (!t.columns[i].unit.empty())
            os << " [" << t.columns[i].unit << "]";
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << ",";
            os << cell_text(row[i]);
        }
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& t)
{
    nlohmann::ordered_json j;
    j["command"] = t.command;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.meta)
        meta[k] = v;
    j["meta"] = meta;
    j["flagged_rows"] = t.flagged_rows;
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const Column& c : t.columns)
        cols.push_back({{"name", c.name}, {"unit", c.unit}});
    j["columns"] = cols;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Cell& c : row) {
            if (auto d = std::get_if<double>(&c))
                r.push_back(std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(format_double(*d)));
            else if (auto l = std::get_if<long>(&c))
                r.push_back(*l);
            else
                r.push_back(std::get<std::string>(c));
        }
        rows.push_back(r);
    }
    j["rows"] = rows;
    os << j.dump(2) << "\n";
}

}  // namespace zpr::cli
