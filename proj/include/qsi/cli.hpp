#pragma once

#include <iosfwd>

namespace qsi {

/// Command dispatch for the qsi tool. Returns the process exit code:
/// 0 success, 1 input or usage error, 2 identity check beyond tolerance.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qsi
