#pragma once

namespace fishan::cli {

// Parses argv, runs the requested command, writes its output file (or stdout
// for "-"). Returns the process exit code:
//   0 success, 2 configuration error, 3 input parse/data error,
//   4 numerical/domain error, 5 quadrature non-convergence.
// Diagnostics go to stderr as a single line.
int run(int argc, const char* const* argv);

}  // namespace fishan::cli
