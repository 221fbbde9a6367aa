// Copyright 2026 The hamsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hamsurf/certificate.hpp"

namespace hamsurf {

struct CommandOptions {
  std::filesystem::path charts = HAMSURF_DEFAULT_CHARTS;
  std::filesystem::path coxeter = HAMSURF_DEFAULT_COXETER;
  int radius = 2;
  std::uint64_t budget = 100'000'000;
};

std::vector<Certificate> cmd_check_ladder(const CommandOptions& options);
std::vector<Certificate> cmd_check_quotient(const CommandOptions& options);
std::vector<Certificate> cmd_check_cover(const CommandOptions& options);
std::vector<Certificate> cmd_find_surfaces(const CommandOptions& options);
std::vector<Certificate> cmd_check_aut(const CommandOptions& options);
std::vector<Certificate> cmd_check_all(const CommandOptions& options);

// Command names accepted by run_command, in check-all order.
const std::vector<std::string>& command_names();
std::vector<Certificate> run_command(const std::string& name, const CommandOptions& options);

}  // namespace hamsurf
