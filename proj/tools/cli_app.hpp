// Entry point of the enlattice CLI, separated from main() so the test suite
// can drive full command lines in-process and capture the streams.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace enlattice::cli {

// Runs one command line (without the program name).  Returns the process
// exit code: 0 all requested checks verified, 1 an identity failed,
// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Version string embedded in every report.
const char* version();

} // namespace enlattice::cli
