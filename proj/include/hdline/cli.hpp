#ifndef HDLINE_CLI_HPP
#define HDLINE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hdline::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hdline::cli

#endif
