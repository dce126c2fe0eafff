#include <iostream>

#include "commands.hpp"
#include "erlab/errors.hpp"

int main(int argc, char** argv) {
  using namespace erlab;
  CLI::App app{"Exact colouring counts, censuses and certified bounds for t-intersecting families"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::RunConfig cfg;
  cli::add_global_flags(app, cfg);
  cli::Action action;
  cli::register_commands(app, cfg, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.validate();
    const cli::Report report = action();
    cli::emit(std::cout, report, cfg.format);
    return report.exit_code;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
