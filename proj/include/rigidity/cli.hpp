#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out` (or the --output file); failures print a one-line JSON error object
/// {"error": ..., "kind": ...} to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rigidity::cli
