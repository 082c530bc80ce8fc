#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cdgs::cli {

/// Exit statuses of `gsw`.
enum Status : int {
  ok = 0,
  differs = 1,      // check-equiv found a difference, nsf-check found a violation
  bad_input = 2,    // usage, parse or validation error
  truncated = 3,    // --strict and the search was cut by a bound
};

/// Runs `gsw` with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdgs::cli
