#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpe::cli {

enum ExitCode : int {
    kOk = 0,
    kViolation = 1,
    kParseError = 2,
    kCapExceeded = 3,
    kDisconnected = 4,
};

/// Full command line, argv[0] included. Writes the report to `out` and
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fixed float format for reports: rounded to 12 decimals, trailing zeros
/// dropped, integral values without a decimal point.
std::string format_number(double x);

} // namespace dpe::cli
