#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bsy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

/// Runs the `bsy` command line. `args` excludes the program name. Results go
/// to `out`; usage text and error documents go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsy::cli
