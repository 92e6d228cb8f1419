#pragma once

#include <iosfwd>

namespace proxideal {

/// Runs the command-line front end. Returns 0 on completion (verdicts may be
/// negative), 1 on input or validation errors and 2 on feasibility errors.
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace proxideal
