#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mfk {

// Runs one CLI invocation (args exclude the program name) and returns the
// process exit code: 0 success, 1 input error, 2 math failure, 3 verification
// failure.  All reporting goes through the provided streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// prolongation-order cap from MFK_MAX_ORDER (default 12)
int max_jet_order();

} // namespace mfk
