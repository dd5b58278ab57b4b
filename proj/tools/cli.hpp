#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bbgroup::cli {

/// Runs one command. `args` excludes the program name. Returns the exit code:
/// 0 success (JSON report on `out` or the --output file), 1 domain error
/// (error object on `err`), 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bbgroup::cli
