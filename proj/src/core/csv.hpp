#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tailor::csv {

/// Parses comma-delimited text with RFC-4180 quoting (embedded commas,
/// doubled quotes, newlines inside quoted fields). Rows keep their 1-based
/// source line for diagnostics.
struct Row {
    std::vector<std::string> fields;
    int line = 0;
};

std::vector<Row> parse(std::string_view text);

std::string escape_field(std::string_view field);

std::string join_row(const std::vector<std::string>& fields);

}  // namespace tailor::csv
