#pragma once

#include <optional>
#include <string>

#include "erlab/constructions.hpp"
#include "report.hpp"

namespace erlab::cli {

/// A parsed construction descriptor and what it produced.
struct Construction {
  std::string kind;
  Universe universe;
  UnionResult result;
  std::vector<Centre> centres;
  std::optional<Subspace> W;  // greedy, orthogonal and v2
};

/// Builds the family described by a JSON construction descriptor (see docs/formats.md).
/// Throws ConfigError for malformed descriptors and DomainError for infeasible ones.
Construction build_construction(const Json& descriptor);
Construction build_construction_file(const std::string& path);

/// Centre text as used on the command line: "1,2" for sets, "1000;0100" for subspaces,
/// "1:2,3:3" (index:value, 1-based) for permutations.
Centre parse_centre(const Universe& u, const std::string& text);
std::string format_centre(const Universe& u, const Centre& c);
std::vector<KSet> parse_set_centres(unsigned n, const std::string& text);

}  // namespace erlab::cli
