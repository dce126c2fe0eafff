#pragma once

#include <iosfwd>
#include <string>

#include "erlab/family.hpp"

namespace erlab {

// Plain-text family files.
//
//   set n=5 k=2          vs q=2 n=4 k=2          perm n=4
//   1,2                  1010;0101               2,1,4,3
//
// Vector rows use one base-36 digit per coordinate, so q <= 36 in files.
// Blank lines and text after '#' are ignored. Errors raise ParseError.

Family read_family(std::istream& in);
Family read_family_file(const std::string& path);
Family parse_family(const std::string& text);

void write_family(std::ostream& out, const Family& f);
std::string format_family(const Family& f);

std::string format_element(const Universe& u, const GroundElement& e);
/// Parses one member line of the given universe; line is used for error messages only.
GroundElement parse_element(const Universe& u, const std::string& text, std::size_t line = 0);
Universe parse_header(const std::string& text, std::size_t line = 0);

}  // namespace erlab
