#pragma once

#include <charconv>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace fbent {

// Shortest decimal that round-trips to the same double.
inline std::string shortest_decimal(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

inline void write_csv_row(std::ostream& out, std::span<const std::string> cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

}  // namespace fbent
