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

#include "hamsurf/certificate.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <memory>
#include <set>
#include <stdexcept>

namespace hamsurf {

std::string_view to_string(CertStatus status) {
  switch (status) {
    case CertStatus::kPass:
      return "pass";
    case CertStatus::kFail:
      return "fail";
    case CertStatus::kError:
      return "error";
  }
  return "error";
}

Certificate make_certificate(std::string claim, std::string statement, bool pass,
                             nlohmann::json witness, std::string fixture_digest) {
  return Certificate{std::move(claim), std::move(statement),
                     pass ? CertStatus::kPass : CertStatus::kFail, std::move(witness),
                     HAMSURF_VERSION, std::move(fixture_digest)};
}

Certificate error_certificate(std::string claim, std::string statement, std::string message,
                              std::string fixture_digest) {
  return Certificate{std::move(claim), std::move(statement), CertStatus::kError,
                     nlohmann::json{{"error", std::move(message)}}, HAMSURF_VERSION,
                     std::move(fixture_digest)};
}

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string fixture_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "missing:" + path.filename().string();
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return "sha256:" + sha256_hex(bytes);
}

nlohmann::json to_json(const Certificate& cert) {
  return nlohmann::json{{"claim", cert.claim},
                        {"paper_ref", cert.paper_ref},
                        {"status", to_string(cert.status)},
                        {"witness", cert.witness},
                        {"tool_version", cert.tool_version},
                        {"fixture_digest", cert.fixture_digest}};
}

std::string format_json(const std::vector<Certificate>& certs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Certificate& c : certs) out.push_back(to_json(c));
  return out.dump(2) + "\n";
}

std::string format_text(const std::vector<Certificate>& certs) {
  std::size_t width = 5;
  for (const Certificate& c : certs) width = std::max(width, c.claim.size());
  std::string out = fmt::format("{:<{}}  {:<6}  {}\n", "claim", width, "status", "statement");
  for (const Certificate& c : certs) {
    out += fmt::format("{:<{}}  {:<6}  {}\n", c.claim, width, to_string(c.status), c.paper_ref);
    for (const auto& [key, value] : c.witness.items()) {
      out += fmt::format("{:<{}}    {} = {}\n", "", width, key, value.dump());
    }
  }
  std::set<std::pair<std::string, std::string>> sources;
  for (const Certificate& c : certs) sources.emplace(c.tool_version, c.fixture_digest);
  for (const auto& [version, digest] : sources) {
    out += fmt::format("tool {}  fixture {}\n", version, digest);
  }
  return out;
}

bool all_pass(const std::vector<Certificate>& certs) {
  for (const Certificate& c : certs) {
    if (c.status != CertStatus::kPass) return false;
  }
  return true;
}

}  // namespace hamsurf
