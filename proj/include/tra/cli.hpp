#pragma once

// Front-end of `tra-spectra`. Kept in the library so tests can drive it in-process.

#include <ostream>

namespace tra {

/// Exit codes: 0 success, 1 numerical-check failure, 2 usage or configuration error.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// `out` receives data written to "-", `err` diagnostics and usage text.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tra
