#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "erlab/bigint.hpp"

namespace erlab::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

/// One command's output in all three renderings. Text defaults to one "key: value" line per
/// top-level JSON field when left empty.
struct Report {
  Json json = Json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string text;
  int exit_code = 0;
};

void emit(std::ostream& out, const Report& report, Format format);

inline std::string dec(const BigCount& v) { return to_decimal(v); }
std::string csv_escape(const std::string& field);
std::string fmt_double(double x);

}  // namespace erlab::cli
