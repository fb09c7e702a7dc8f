#include "output.hpp"

#include <cmath>

#include "mathieu/format.hpp"

namespace cli {

void OutputTable::add_row(std::vector<Value> row) {
  if (row.size() != columns.size()) {
    mathieu::fail(mathieu::ErrorKind::parameter, "output row width mismatch");
  }
  for (const Value& v : row) {
    if (const double* d = std::get_if<double>(&v)) {
      if (!std::isfinite(*d)) {
        mathieu::fail(mathieu::ErrorKind::domain,
                      "refusing to serialize a non-finite value");
      }
    }
  }
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  mathieu::fail(mathieu::ErrorKind::parameter, "unknown format '" + name + "'");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += "\"";
  return out;
}

std::string render(const Value& v, bool json) {
  if (const double* d = std::get_if<double>(&v)) return mathieu::format_double(*d);
  if (const long long* i = std::get_if<long long>(&v)) return std::to_string(*i);
  const std::string& s = std::get<std::string>(v);
  return json ? json_string(s) : csv_field(s);
}

}  // namespace

std::string emit(const OutputTable& table, Format format) {
  std::string out;
  if (format == Format::csv) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += csv_field(table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += render(row[c], false);
      }
      out += '\n';
    }
    return out;
  }

  if (table.rows.empty()) return "[]\n";
  out += "[\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    out += "  {";
    for (size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ", ";
      out += json_string(table.columns[c]);
      out += ": ";
      out += render(table.rows[r][c], true);
    }
    out += (r + 1 < table.rows.size()) ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

}  // namespace cli
