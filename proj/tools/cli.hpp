#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levytree::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2, kRuntimeError = 3 };

/// Parses `args` (without the program name) and runs the subcommand.
/// Results go to `out` unless --output names a file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `contents` to `path` through a temporary file in the same directory
/// followed by a rename.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace levytree::cli
