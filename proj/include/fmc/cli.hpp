#pragma once

// Command-line front end. `run` parses the arguments (without the program
// name), executes one subcommand and returns the exit status:
// 0 success, 1 domain error or failed membership verdict, 2 usage error.
// Domain errors are reported on `err` as {"error": ..., "kind": ...}.

#include <iosfwd>
#include <string>
#include <vector>

namespace fmc::cli {

struct CommandInfo {
  std::string group;  // empty for top-level commands
  std::string name;
  std::vector<std::string> operations;  // library operations it exposes
  std::string summary;
};

const std::vector<CommandInfo>& command_table();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmc::cli
