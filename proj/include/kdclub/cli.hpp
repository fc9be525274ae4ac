#pragma once

#include <iosfwd>

namespace kdclub {

/// Exit codes: 0 when every run finished optimally, 2 when any run timed
/// out, 1 on errors (bad flags, unreadable or malformed input).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kdclub
