#include "fluxbound/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace fluxbound {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw ValidationError("unknown output format '" + name + "' (expected csv or jsonl)");
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_real(v); }
  std::string operator()(const ExtendedReal& v) const {
    return v.finite() ? format_real(v.value()) : "inf";
  }
  std::string operator()(const std::string& v) const { return csv_escape(v); }
};

// JSON has no infinity literal; non-finite reals are emitted as strings.
struct JsonCell {
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const {
    return std::isfinite(v) ? format_real(v) : json_escape(format_real(v));
  }
  std::string operator()(const ExtendedReal& v) const {
    return v.finite() ? (*this)(v.value()) : json_escape("inf");
  }
  std::string operator()(const std::string& v) const { return json_escape(v); }
};

}  // namespace

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
  if (format == OutputFormat::csv) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(table.header[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        os << std::visit(CsvCell{}, row[i]);
      }
      os << '\n';
    }
    return;
  }
  for (const auto& row : table.rows) {
    os << '{';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << json_escape(table.header.at(i)) << ':' << std::visit(JsonCell{}, row[i]);
    }
    os << "}\n";
  }
}

}  // namespace fluxbound
