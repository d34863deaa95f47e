#ifndef FIBREFILTER_CLI_HPP
#define FIBREFILTER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fibrefilter::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoError = 1,
  kValidationError = 2,
};

/// Runs the `point`, `sweep` or `mpps` subcommand. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fibrefilter::cli

#endif
