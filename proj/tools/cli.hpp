#ifndef CTV_TOOLS_CLI_HPP
#define CTV_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ctv/cocycle.hpp"

namespace ctv::cli {

/** Test seam: replace the internally built chains in cocycle checks. */
struct Hooks {
  const SpecialChains* override_chains = nullptr;
};

/**
 * Dispatch a command line.  Machine-readable run report (command,
 * parameters, result, elapsed_ms, exact) goes to `out` as JSON; a
 * human-readable summary goes to `err` unless --json-only is given.
 *
 * Exit codes: 0 success, 1 a verified identity failed, 2 usage or input
 * error, 3 budget exceeded.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const Hooks& hooks = {});

}  // namespace ctv::cli

#endif  // CTV_TOOLS_CLI_HPP
