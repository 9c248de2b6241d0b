#ifndef SUBALG_REPORT_HPP
#define SUBALG_REPORT_HPP

#include <string>

#include "subalg/problem.hpp"

namespace subalg {

struct RunOptions {
  bool json = false;
  bool trail = false;
  bool certificates = false;
  int max_passes = 0;  // 0: problem file value or the default
  std::string poly;    // member/reduce query
};

struct RunResult {
  int status = 0;  // 0 decided/completed, 3 iteration cap reached
  std::string text;
};

/// Dispatch: sagbi | sg | syz | reduce | member. Throws ParseError or
/// std::invalid_argument on invalid input (exit code 2 territory).
RunResult run_command(const ProblemFile& problem, const std::string& command,
                      const RunOptions& opts);

}  // namespace subalg

#endif
