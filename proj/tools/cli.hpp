#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace yuppie::cli {

/// Runs the driver on `args` (without the program name). Results and
/// {"error": ...} objects go to `out`; usage messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yuppie::cli
