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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamsurf/complex.hpp"

namespace hamsurf {

struct ChartEdge {
  std::string symbol;
  std::string from;
  std::string to;
  int line = 0;
};

struct ChartLetter {
  std::string symbol;
  bool forward = true;
};

struct ChartFace {
  std::string id;
  FaceKind kind = FaceKind::kTriangle;
  std::vector<ChartLetter> word;
  int line = 0;
};

struct ChartSurface {
  std::string name;
  std::vector<std::string> faces;
  int line = 0;
};

// Parsed chart file:
//   edge <symbol> : <from> -> <to>
//   face <id> <triangle|lozenge> : <symbol>(+|-) ...
//   surface <name> : <face id> ...
struct ChartData {
  std::vector<ChartEdge> edges;
  std::vector<ChartFace> faces;
  std::vector<ChartSurface> surfaces;

  const ChartSurface* find_surface(std::string_view name) const;
};

class ChartError : public std::runtime_error {
 public:
  ChartError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

ChartData parse_charts(std::string_view text);
ChartData load_charts(const std::filesystem::path& path);

// Canonical text form; parse_charts(format_charts(d)) == d up to line numbers.
std::string format_charts(const ChartData& data);

// Vertices are created in sorted name order, edges and faces in file order.
// Throws ChartError on duplicate symbols, unknown symbols and wrong arity.
// Closure of the boundary words is left to validate_complex.
Complex2 build_complex(const ChartData& data);

}  // namespace hamsurf
