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

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hamsurf/commands.hpp"

namespace {

const char* kDescription =
    "Verification commands for Hamiltonian surfaces in a triangle/lozenge complex. "
    "Each command prints certificates; the exit status is 0 iff all of them pass.";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{kDescription, "hamsurf"};
  app.set_version_flag("--version", HAMSURF_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  hamsurf::CommandOptions options;
  std::string out_dir;
  std::string format = "json";
  app.add_option("--charts", options.charts, "charts fixture for the quotient complex")
      ->check(CLI::ExistingFile);
  app.add_option("--coxeter", options.coxeter, "graph fixture for the Coxeter check")
      ->check(CLI::ExistingFile);
  app.add_option("--radius", options.radius, "ball radius for check-cover and find-surfaces")
      ->check(CLI::Range(0, 8));
  app.add_option("--budget", options.budget, "node budget of the exhaustive surface search");
  app.add_option("--out", out_dir, "write <command>.<format> into this directory");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  const std::vector<std::pair<std::string, std::string>> commands{
      {"check-ladder", "Hamiltonian cycles of the link graph L and the Coxeter graph"},
      {"check-quotient", "validity, surfaces S and S', and flat pieces of the quotient V"},
      {"check-cover", "balls of the universal cover"},
      {"find-surfaces", "Hamiltonian surfaces in a ball, with the exhaustive oracle"},
      {"check-aut", "automorphism group of V and the theta tables"},
      {"check-all", "every command above"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  CLI11_PARSE(app, argc, argv);

  const std::string name = app.get_subcommands().front()->get_name();
  std::vector<hamsurf::Certificate> certs;
  try {
    certs = hamsurf::run_command(name, options);
  } catch (const std::exception& e) {
    std::cerr << "hamsurf: " << e.what() << "\n";
    return 2;
  }
  const std::string body =
      format == "json" ? hamsurf::format_json(certs) : hamsurf::format_text(certs);
  if (out_dir.empty()) {
    std::cout << body;
  } else {
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / fmt::format("{}.{}", name, format);
    std::ofstream(path) << body;
    std::cerr << fmt::format("wrote {}\n", path.string());
  }
  return hamsurf::all_pass(certs) ? 0 : 1;
}
