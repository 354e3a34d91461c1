#ifndef FROBMF_CLI_HPP
#define FROBMF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace frobmf {

/// Exit codes: 0 success, 2 invalid input, 3 resource bound exceeded,
/// 1 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;

/// Runs one command (args excludes the program name). Data goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobmf

#endif
