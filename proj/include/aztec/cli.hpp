#pragma once

#include <iosfwd>

namespace aztec {

// Exit codes: 0 ok, 1 a verification check failed, 2 usage or config error,
// 3 internal invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aztec
