#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobkit::cli {

// Runs one frobkit invocation. The JSON report goes to `out` (or --out), a
// one-line summary to `err`. Returns 0 on success, 2 when precision ran out
// and 1 on any other error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobkit::cli
