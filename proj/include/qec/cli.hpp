#ifndef QEC_CLI_HPP
#define QEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qec::cli {

// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 verification failure, 5 numeric failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitVerification = 4;
inline constexpr int kExitNumeric = 5;

// Dispatches one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qec::cli

#endif
