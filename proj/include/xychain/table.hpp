#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace xychain {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// 12 significant digits, '.' decimal separator regardless of locale.
std::string format_number(double value);

/// Fixed-schema table written as CSV (header row, RFC 4180 quoting, LF endings)
/// or as a JSON array with one object per row keyed by the header names.
class Table {
public:
    explicit Table(std::vector<std::string> headers);

    void add_row(std::vector<Cell> row);
    const std::vector<std::string>& headers() const { return headers_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    void write(std::ostream& os, std::string_view format) const;

private:
    std::vector<std::string> headers_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace xychain
