#pragma once

#include <iosfwd>

namespace togglekit {

// Entry point for the `togglekit` binary. Exit codes: 0 success,
// 1 property/verification failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace togglekit
