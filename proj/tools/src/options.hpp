#pragma once

#include <optional>
#include <string>

#include <CLI11.hpp>

#include "erlab/bigint.hpp"
#include "erlab/census.hpp"
#include "erlab/counting.hpp"
#include "erlab/family.hpp"
#include "report.hpp"
#include "erlab/search.hpp"

namespace erlab::cli {

/// Flags shared by every command.
struct RunConfig {
  Format format = Format::Json;
  unsigned jobs = 1;
  unsigned subset_bits = 24;
  std::uint64_t oracle_cap = 100'000'000;
  std::size_t census_cap = 1'000'000;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  unsigned precision_bits = 512;
  std::string slack = "2";

  CountingLimits counting() const { return {subset_bits, oracle_cap, jobs}; }
  CensusLimits census() const { return {census_cap, jobs}; }
  SearchOptions search() const;
  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

void add_global_flags(CLI::App& app, RunConfig& cfg);

/// --set / --vs / --perm with -n, -k, -q.
struct UniverseFlags {
  bool set = false;
  bool vs = false;
  bool perm = false;
  unsigned n = 0;
  unsigned k = 0;
  unsigned q = 0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* q_opt = nullptr;

  void add(CLI::App& app, bool need_k = true);
  bool given() const { return set || vs || perm; }
  Setting setting() const;
  /// Throws ConfigError when the flags do not describe a universe.
  Universe universe() const;
};

Json universe_json(const Universe& u);

}  // namespace erlab::cli
