// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 limit exceeded or internal error.

#ifndef HEXFORCE_CLI_HPP_
#define HEXFORCE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hexforce::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitLimit = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hexforce::cli

#endif
