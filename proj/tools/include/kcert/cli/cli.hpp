#ifndef KCERT_CLI_CLI_HPP
#define KCERT_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kcert::cli {

// Exit codes: 0 accept / valid, 1 reject / invalid, 2 usage, input or
// resource error.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcert::cli

#endif  // KCERT_CLI_CLI_HPP
