#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace esdmem::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kArgumentError = 2,
  kNumericalFailure = 3,
};

// Decimal radians or one of the tokens pi, pi/2, pi/3, pi/4, 2pi.
double parse_angle(std::string_view text);
// "start:stop:count" (count >= 2) or a single value; endpoints accept angle tokens.
std::vector<double> parse_grid(std::string_view text);

// Entry point shared by the executable and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esdmem::cli
