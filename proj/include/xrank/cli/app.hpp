#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xrank::cli {

/// Runs one command line. Results go to `out` as JSON, diagnostics to `err`.
/// Exit codes: 0 verified or computed, 1 refuted, 2 invalid input, 3 undecided.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xrank::cli
