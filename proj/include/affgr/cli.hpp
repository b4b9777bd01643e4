#pragma once

#include <iosfwd>

namespace affgr {

/// Entry point of the `affgr` tool. Exit codes: 0 success, 1 a verify suite
/// failed, 2 bad arguments or element text, 3 a size limit was exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affgr
