#ifndef NUMASCHED_CLI_HPP
#define NUMASCHED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "numasched/report.hpp"
#include "numasched/simulator.hpp"
#include "numasched/topology.hpp"

namespace numasched {

struct CliConfig {
  ExperimentSpec experiment;
  Topology topology{4, 4, 16};
  OutputFormat format = OutputFormat::table;
  std::string out_path;  // empty: standard output
  bool verify = false;   // oracle cross-check before the run
};

// Thrown for bad flags; `usage_error` distinguishes exit status 2 from
// runtime failures (status 1).
struct CliError : std::runtime_error {
  explicit CliError(const std::string& what, bool usage = true)
      : std::runtime_error(what), usage_error(usage) {}
  bool usage_error;
};

// Parses the argument vector (without argv[0]). Throws CliError on
// invalid or conflicting flags.
CliConfig parse_cli(const std::vector<std::string>& args);

// Full run: parse, optionally verify, sweep, render. Diagnostics go to
// `err`; machine output only ever goes to `out` (or --out file).
// Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace numasched

#endif  // NUMASCHED_CLI_HPP
