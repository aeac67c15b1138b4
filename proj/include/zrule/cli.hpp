#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zrule::cli {

enum ExitCode : int { Ok = 0, Violation = 1, Usage = 2 };

// Full command-line entry point. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reads a flat key=value file ('#' comments, blank lines ignored) into
// "--key=value" tokens.
std::vector<std::string> config_tokens(const std::string& path);

}  // namespace zrule::cli
