#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace eulerdenom::testing {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

// Runs the installed CLI binary (path baked in at build time) with the given
// argument string; stderr is left on the test's own stderr.
inline CliResult run_cli(const std::string& args) {
#ifndef EULERDENOM_CLI_PATH
#error "EULERDENOM_CLI_PATH must be defined for CLI-driving tests"
#endif
  const std::string command = std::string(EULERDENOM_CLI_PATH) + " " + args;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + command);
  }
  CliResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace eulerdenom::testing
