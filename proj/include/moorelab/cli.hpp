#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moorelab::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kVerificationFailed = 3,
    kIoError = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Reports go to `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moorelab::cli
