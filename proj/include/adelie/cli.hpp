#pragma once

// Command-line front end, kept in the library so tests can drive it without
// spawning processes. Exit codes: 0 ok, 1 a check failed, 2 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace adelie::cli {

struct Operation {
  std::string op;
  std::string command;
};

// Every library operation and the single command that exposes it.
const std::vector<Operation>& dispatch_table();

const std::vector<std::string>& command_names();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adelie::cli
