#pragma once

// Tabular output shared by every CLI subcommand: CSV with a header row or
// JSON lines keyed by the same headers. Reals are printed with 17
// significant digits; infinite values print as the token inf.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "fluxbound/common.hpp"

namespace fluxbound {

using Cell = std::variant<std::int64_t, double, ExtendedReal, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, jsonl };

OutputFormat parse_output_format(const std::string& name);

std::string format_real(double v);

/// RFC 4180 quoting: fields containing a comma, quote or line break are quoted.
std::string csv_escape(const std::string& field);

void write_table(std::ostream& os, const Table& table, OutputFormat format);

}  // namespace fluxbound
