#pragma once

// The nearsemi command line: argument parsing, dispatch and report output.
// Exit status 0 when every verdict passes, 1 on FAIL or DISAGREE, 2 on
// usage or input errors.

#include <ostream>
#include <string>
#include <vector>

namespace nearsemi::cli {

  inline constexpr int kExitPass    = 0;
  inline constexpr int kExitAdverse = 1;
  inline constexpr int kExitUsage   = 2;

  //! args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace nearsemi::cli
