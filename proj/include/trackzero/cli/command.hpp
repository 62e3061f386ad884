#ifndef TRACKZERO_CLI_COMMAND_HPP
#define TRACKZERO_CLI_COMMAND_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tz {

enum ExitCode : int { kExitOk = 0, kExitFalsified = 1, kExitCertification = 2, kExitUsage = 3 };

struct RunConfig {
  std::string command;
  std::string suite;  // verify only
  std::string field;
  std::string x;
  std::string y;
  std::vector<std::string> generators;
  std::string domain = "plane";
  std::string region;  // empty: [-1,1]^2 on the plane, the full torus otherwise
  unsigned depth = 0;  // 0: per-command default
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  double tol = 1e-6;
  double step = 1e-3;
  double horizon = 1.0;
  std::string out;  // JSON path; empty writes to the output stream
  std::string svg;
  std::string catalog;
};

// Parses argv, runs the command and writes the JSON report. Returns an ExitCode.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tz

#endif
