#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cript::cli {

/// Runs the `cript` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors, 2 on usage, I/O or format errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cript::cli
