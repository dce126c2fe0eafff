#pragma once

#include <functional>

#include "options.hpp"

namespace erlab::cli {

using Action = std::function<Report()>;

/// Adds every subcommand to app; the parsed subcommand stores its work in action.
void register_commands(CLI::App& app, const RunConfig& cfg, Action& action);

}  // namespace erlab::cli
