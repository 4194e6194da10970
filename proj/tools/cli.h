#ifndef QID_TOOLS_CLI_H
#define QID_TOOLS_CLI_H

#include <ostream>

namespace qid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Entry point for `qid <build|verify|simulate|optimize> [flags]`.
/// Results go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qid::cli

#endif
