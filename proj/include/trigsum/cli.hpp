// The trigsum command line: eval, verify, table, bench.
//
// Exit codes are 0 (success), 1 (verification mismatch) and 2 (usage or
// parameter error), nothing else.

#ifndef TRIGSUM_CLI_HPP_
#define TRIGSUM_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace trigsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigsum::cli

#endif  // TRIGSUM_CLI_HPP_
