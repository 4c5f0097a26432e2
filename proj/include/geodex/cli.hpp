#ifndef GEODEX_CLI_HPP
#define GEODEX_CLI_HPP

#include <string>
#include <vector>

namespace geodex {

// Full command-line driver. Exit codes: 0 success, 1 classification mismatch
// (selftest failure or --oracle disagreement), 2 input error.
int run_cli(int argc, const char* const* argv);

// Convenience overload for tests; args excludes the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace geodex

#endif
