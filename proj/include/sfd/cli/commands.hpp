#pragma once

#include <iosfwd>

#include "sfd/cli/report.hpp"

namespace sfd::cli {

// Each command writes its report to config.out (standard output when empty)
// and returns a process exit code. Library exceptions propagate to run().

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_resolvent(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_uniformity(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sfd::cli
