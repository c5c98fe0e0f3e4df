#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symex::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kDomain = 3,
};

/// Runs `symex <args...>`; args excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symex::cli
