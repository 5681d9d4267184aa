#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symlift::cli {

// Runs one subcommand. args excludes the program name. JSON reports go to
// `out`, summaries and usage to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symlift::cli
