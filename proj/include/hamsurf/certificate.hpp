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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hamsurf {

enum class CertStatus { kPass, kFail, kError };

std::string_view to_string(CertStatus status);

struct Certificate {
  std::string claim;
  std::string paper_ref;  // plain statement of the claim being checked
  CertStatus status = CertStatus::kError;
  nlohmann::json witness = nlohmann::json::object();
  std::string tool_version;
  std::string fixture_digest;
};

Certificate make_certificate(std::string claim, std::string statement, bool pass,
                             nlohmann::json witness, std::string fixture_digest);
Certificate error_certificate(std::string claim, std::string statement, std::string message,
                              std::string fixture_digest);

// "sha256:<hex>" of the file contents; "missing:<path>" if it cannot be read.
std::string fixture_digest(const std::filesystem::path& path);
std::string sha256_hex(std::string_view bytes);

nlohmann::json to_json(const Certificate& cert);
std::string format_json(const std::vector<Certificate>& certs);
std::string format_text(const std::vector<Certificate>& certs);

bool all_pass(const std::vector<Certificate>& certs);

}  // namespace hamsurf
