#include "report.hpp"

#include <cstdio>
#include <ostream>

namespace erlab::cli {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void write_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(row[i]);
  }
  out << '\n';
}

}  // namespace

void emit(std::ostream& out, const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      out << report.json.dump(2) << '\n';
      break;
    case Format::Csv:
      write_row(out, report.csv_header);
      for (const auto& row : report.csv_rows) write_row(out, row);
      break;
    case Format::Text:
      if (!report.text.empty()) {
        out << report.text;
        if (report.text.back() != '\n') out << '\n';
        break;
      }
      for (const auto& [key, value] : report.json.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
      break;
  }
}

}  // namespace erlab::cli
