#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mathieu/types.hpp"

namespace cli {

using Value = std::variant<double, long long, std::string>;

/// Flat table with a fixed column schema; the row order is the emit order.
struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  /// Validates width and rejects non-finite numbers (never serialized).
  void add_row(std::vector<Value> row);
};

enum class Format { csv, json };

Format parse_format(const std::string& name);

/// CSV: header row then data rows, RFC-4180 quoting, LF endings.
/// JSON: array of flat objects, one per row, insertion-ordered keys.
/// All doubles are rendered with the shared 17-significant-digit formatter.
std::string emit(const OutputTable& table, Format format);

}  // namespace cli
