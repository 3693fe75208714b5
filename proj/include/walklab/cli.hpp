#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walklab {

// Command-line entry point; returns the process exit code.
//   0  success
//   1  theorem violation, integrity failure, or exceeded work budget
//   2  usage or input error
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace walklab
