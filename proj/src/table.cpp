#include "xychain/table.hpp"

#include <charconv>
#include <cmath>
#include "json.hpp"

#include "xychain/errors.hpp"

namespace xychain {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render(const Cell& cell, bool json) {
    return std::visit(
        [json](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v))
                    return json ? "null" : "nan";
                return format_number(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return json ? nlohmann::json(v).dump() : csv_escape(v);
            }
        },
        cell);
}

} // namespace

std::string format_number(double value) {
    if (value == 0.0)
        value = 0.0;  // drop the sign of negative zero
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

Table::Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != headers_.size())
        throw ValidationError("row width does not match table schema");
    rows_.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < headers_.size(); ++i)
        os << (i ? "," : "") << csv_escape(headers_[i]);
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << render(row[i], false);
        os << '\n';
    }
}

void Table::write_json(std::ostream& os) const {
    os << "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        os << (r ? ",\n" : "\n") << "  {";
        for (std::size_t i = 0; i < headers_.size(); ++i)
            os << (i ? ", " : "") << nlohmann::json(headers_[i]).dump() << ": " << render(rows_[r][i], true);
        os << "}";
    }
    os << (rows_.empty() ? "]\n" : "\n]\n");
}

void Table::write(std::ostream& os, std::string_view format) const {
    if (format == "csv")
        write_csv(os);
    else if (format == "json")
        write_json(os);
    else
        throw ValidationError("unknown output format '" + std::string(format) + "'");
}

} // namespace xychain
