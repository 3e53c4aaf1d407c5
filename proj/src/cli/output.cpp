#include "dualspec/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dualspec::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return format_real(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::string>)
                return v;
            else
                return std::to_string(v);
        },
        c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

Json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return format_real(v);
            }
            return v;
        },
        c);
}

// Non-finite reals travel as the strings written by format_real.
Cell json_cell(const Json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return INFINITY;
        if (s == "-inf") return -INFINITY;
        if (s == "nan") return NAN;
        return s;
    }
    throw ConfigError("record: unsupported JSON value " + j.dump());
}

}  // namespace

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const OutputRecord& record) {
    std::ostringstream os;
    for (const auto& [key, value] : record.header) os << "# " << key << '=' << cell_text(value) << '\n';
    for (std::size_t i = 0; i < record.columns.size(); ++i) os << (i ? "," : "") << csv_field(record.columns[i]);
    os << '\n';
    for (const auto& row : record.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
        os << '\n';
    }
    return os.str();
}

std::string to_json(const OutputRecord& record) {
    Json header = Json::object();
    for (const auto& [key, value] : record.header) header[key] = cell_json(value);
    header["columns"] = record.columns;
    Json rows = Json::array();
    for (const auto& row : record.rows) {
        Json r = Json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[record.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(r));
    }
    Json doc = Json::object();
    doc["header"] = std::move(header);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

OutputRecord from_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("record: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("header") || !doc.contains("rows"))
        throw ConfigError("record: expected {header, rows}");
    OutputRecord r;
    for (const auto& [key, value] : doc["header"].items()) {
        if (key == "columns") {
            r.columns = value.get<std::vector<std::string>>();
            continue;
        }
        r.header.emplace_back(key, json_cell(value));
    }
    for (const auto& row : doc["rows"]) {
        std::vector<Cell> cells;
        cells.reserve(r.columns.size());
        for (const std::string& col : r.columns) cells.push_back(json_cell(row.at(col)));
        r.rows.push_back(std::move(cells));
    }
    return r;
}

}  // namespace dualspec::cli
