#ifndef QFI_TOOLS_CLI_HPP
#define QFI_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qfi::cli {

/* Exit codes: verdicts never change the exit status. */
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;

/* args excludes the program name. */
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace qfi::cli

#endif
