#pragma once

#include <string>
#include <vector>

namespace gbg::cli {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnsupported = 2;

// `args` excludes the program name.
CliResult run(const std::vector<std::string>& args);

}  // namespace gbg::cli
