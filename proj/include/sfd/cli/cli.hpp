#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sfd::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
};

/// Entry point behind the `sfd` binary; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfd::cli
