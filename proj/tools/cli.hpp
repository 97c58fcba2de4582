#ifndef SCOVER_TOOLS_CLI_HPP_
#define SCOVER_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace scover::cli {

// Exit codes.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInput = 3;
inline constexpr int kResource = 4;

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace scover::cli

#endif  // SCOVER_TOOLS_CLI_HPP_
