#ifndef INFOMASK_CLI_H_
#define INFOMASK_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace infomask {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitSizeGuard = 2;

// Runs one subcommand. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infomask

#endif  // INFOMASK_CLI_H_
