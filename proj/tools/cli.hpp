#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ditc::cli {

/// Runs one command line. Output goes to `out`; returns 0 on success, 2 on
/// domain errors (with a JSON error object on `out`), 1 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ditc::cli
