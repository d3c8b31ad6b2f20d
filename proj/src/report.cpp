#include "thx/report.hpp"

#include <charconv>
#include <cmath>

namespace thx {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return format_double(std::get<double>(c));
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void append_row(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += quote(fields[i]);
  }
  out += '\n';
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  const double d = std::get<double>(c);
  if (!std::isfinite(d)) return nullptr;
  return d;
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  append_row(out, table.columns);
  std::vector<std::string> fields;
  for (const auto& row : table.rows) {
    fields.clear();
    for (const auto& c : row) fields.push_back(cell_text(c));
    append_row(out, fields);
  }
  if (!table.summary.empty()) {
    out += '\n';
    append_row(out, {"summary", "value"});
    for (const auto& [key, value] : table.summary) append_row(out, {key, cell_text(value)});
  }
  return out;
}

std::string render_json(const Table& table, const nlohmann::json& config) {
  nlohmann::ordered_json doc;
  doc["config"] = config;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
      r[table.columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(r));
  }
  if (!table.summary.empty()) {
    nlohmann::ordered_json s;
    for (const auto& [key, value] : table.summary) s[key] = cell_json(value);
    doc["summary"] = std::move(s);
  }
  return doc.dump(2) + "\n";
}

}  // namespace thx
