#pragma once

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace l1approx {

enum class ReportFormat { table, csv, json };

inline ReportFormat parse_format(const std::string& s) {
    if (s == "table") return ReportFormat::table;
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown format: " + s);
}

using Value = std::variant<std::string, double, long long, bool>;
using Row = std::vector<std::pair<std::string, Value>>;

/// One command's worth of output: fixed key order per row, so CSV/JSON output
/// is byte-identical across identical invocations.
struct Report {
    std::string command;
    Row params;
    std::vector<Row> rows;
    bool passed = true;
};

namespace detail {

inline std::string fmt_double(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

inline std::string value_text(const Value& v, int sig) {
    if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
    if (std::holds_alternative<double>(v)) return fmt_double(std::get<double>(v), sig);
    if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
    return std::get<bool>(v) ? "true" : "false";
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string json_value(const Value& v) {
    if (std::holds_alternative<std::string>(v)) return "\"" + json_escape(std::get<std::string>(v)) + "\"";
    return value_text(v, 17);
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_table(const Report& r, std::ostream& os) {
    if (r.rows.empty()) {
        os << r.command << ": no rows\n";
        return;
    }
    std::vector<std::string> headers;
    for (const auto& [k, v] : r.rows.front()) headers.push_back(k);
    std::vector<std::vector<std::string>> cells;
    for (const Row& row : r.rows) {
        std::vector<std::string> line;
        for (const auto& [k, v] : row) line.push_back(value_text(v, 10));
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << line[c];
            if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
        }
        os << '\n';
    };
    emit(headers);
    std::size_t total = 0;
    for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
    os << std::string(total, '-') << '\n';
    for (const auto& line : cells) emit(line);
    os << (r.passed ? "passed" : "FAILED") << '\n';
}

inline void write_csv(const Report& r, std::ostream& os) {
    if (r.rows.empty()) return;
    bool first = true;
    for (const auto& [k, v] : r.rows.front()) {
        if (!first) os << ',';
        os << csv_cell(k);
        first = false;
    }
    os << '\n';
    for (const Row& row : r.rows) {
        first = true;
        for (const auto& [k, v] : row) {
            if (!first) os << ',';
            os << csv_cell(value_text(v, 17));
            first = false;
        }
        os << '\n';
    }
}

inline void write_json(const Report& r, std::ostream& os) {
    os << "{\"command\":\"" << json_escape(r.command) << "\",\"params\":{";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        if (!first) os << ',';
        os << '"' << json_escape(k) << "\":" << json_value(v);
        first = false;
    }
    os << "},\"rows\":[";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (i) os << ',';
        os << '{';
        first = true;
        for (const auto& [k, v] : r.rows[i]) {
            if (!first) os << ',';
            os << '"' << json_escape(k) << "\":" << json_value(v);
            first = false;
        }
        os << '}';
    }
    os << "],\"passed\":" << (r.passed ? "true" : "false") << "}\n";
}

} // namespace detail

inline void write_report(const Report& r, ReportFormat fmt, std::ostream& os) {
    switch (fmt) {
    case ReportFormat::table: detail::write_table(r, os); break;
    case ReportFormat::csv: detail::write_csv(r, os); break;
    case ReportFormat::json: detail::write_json(r, os); break;
    }
}

} // namespace l1approx
