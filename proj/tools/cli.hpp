#ifndef LDLF_TOOLS_CLI_HPP
#define LDLF_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ldlf::cli {

enum Exit : int { ok = 0, negative = 1, input_error = 2, limit_error = 3 };

/// Runs one command line (without the program name). Verdicts and results go
/// to `out`, diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldlf::cli

#endif  // LDLF_TOOLS_CLI_HPP
