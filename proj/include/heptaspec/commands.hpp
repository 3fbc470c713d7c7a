#pragma once

#include <stdexcept>
#include <string>

namespace heptaspec::cli {

/// Bad arguments or incompatible method/size; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

CommandResult cmd_build(int n, const std::string& format);
CommandResult cmd_laplacian(int n, const std::string& format);
CommandResult cmd_decompose(int n, const std::string& part, const std::string& format);
CommandResult cmd_charpoly(const std::string& which, int n, const std::string& format);
CommandResult cmd_kirchhoff(int n, const std::string& method, int max_exact_n);
CommandResult cmd_complexity(int n, const std::string& method, int max_exact_n);
CommandResult cmd_table(const std::string& kind, int from, int to, const std::string& format,
                        int max_exact_n);
/// Exit code 0 iff every non-erratum audit passes.
CommandResult cmd_verify(int n, bool deep, const std::string& format, int max_exact_n);

}  // namespace heptaspec::cli
