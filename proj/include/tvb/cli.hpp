#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tvb::cli {

enum ExitCode { ok = 0, input_error = 1, rejected = 2 };

/// Runs one command; args excludes the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvb::cli
