#ifndef QPSTURM_CLI_HPP_
#define QPSTURM_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace qpsturm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceError = 3;

inline constexpr std::size_t kDefaultPrefix = 2000;
inline constexpr std::size_t kDefaultMaxQuasiperiod = 100;

// Runs one command line (args excludes the program name). Everything is
// written to out/err; `in` backs the "-" word argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace qpsturm::cli

#endif  // QPSTURM_CLI_HPP_
