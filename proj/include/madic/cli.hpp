#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace madic::cli {

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace madic::cli
