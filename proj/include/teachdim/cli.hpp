#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace teachdim::cli {

// full command dispatch; returns the process exit code.
//   0 success | 1 failed verify checks | 2 parse errors (flags or class files)
//   3 infeasible parameters | 4 internal invariant failure
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace teachdim::cli
