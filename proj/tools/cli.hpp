#pragma once

#include <ostream>

namespace eah::cli {

// Entry point of the eahc tool, separated from main() so tests can drive it
// in-process. Returns 0 on success, 1 on usage errors, 2 on data errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eah::cli
