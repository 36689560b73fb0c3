// Copyright 2026 The qpass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace qpass_test {

struct CommandResult {
  int exit_status = -1;
  std::string stdout_bytes;
};

// Runs the CLI with the given argument text, capturing stdout byte for byte.
// stderr is left alone so failures stay visible in the test log.
inline CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(QPASS_CLI_PATH) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
  CommandResult result;
  std::array<char, 4096> buffer{};
  std::size_t read_count = 0;
  while ((read_count = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.stdout_bytes.append(buffer.data(), read_count);
  }
  const int raw = pclose(pipe);
  result.exit_status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

}  // namespace qpass_test
