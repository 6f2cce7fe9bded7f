#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iset {

/// Runs the command-line tool. Arguments mirror main()'s argv without the
/// program name. Returns the process exit code: 0 success, 1 a requested
/// verification failed, 2 invalid input or usage.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace iset
