#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace thx {

using Cell = std::variant<std::string, std::int64_t, double>;

/// Rectangular result table with an optional key/value summary block.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

/// Shortest round-trip decimal form; "nan" / "inf" for non-finite values.
std::string format_double(double x);

/// RFC 4180 style: quotes fields containing separators, quotes or line
/// breaks. LF line endings. The summary follows after one blank line as a
/// `summary,value` table.
std::string to_csv(const Table& table);

/// {"config": ..., "columns": [...], "rows": [{...}], "summary": {...}}.
/// Non-finite doubles become null.
std::string render_json(const Table& table, const nlohmann::json& config);

}  // namespace thx
