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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamsurf/angle.hpp"

namespace hamsurf {

struct GraphEdge {
  int u = 0;
  int v = 0;
  std::optional<AngleLabel> label;
  bool rung = false;

  int other(int node) const { return node == u ? v : u; }
};

// Undirected multigraph with optional angle labels on edges. Self-loops are
// rejected: links of triangle/lozenge complexes never have them.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int node_count);

  int add_node(std::string name = {});
  int add_edge(int u, int v, std::optional<AngleLabel> label = std::nullopt,
               bool rung = false);
  void set_rung(int edge, bool rung = true);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const GraphEdge& edge(int e) const { return edges_.at(e); }
  std::span<const GraphEdge> edges() const { return edges_; }
  std::span<const int> incident(int node) const { return adjacency_.at(node); }
  int degree(int node) const { return static_cast<int>(adjacency_.at(node).size()); }
  const std::string& node_name(int node) const { return names_.at(node); }
  std::optional<int> find_node(std::string_view name) const;

  bool fully_labeled() const;
  bool connected() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<GraphEdge> edges_;
};

// Text fixture format:
//   node <id>
//   edge <id1> <id2> [t|l|L]
//   rung <id1> <id2>        (marks an existing edge as a rung)
// '#' starts a comment. Throws GraphParseError with the line number.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

LabeledGraph parse_graph(std::string_view text);
LabeledGraph load_graph(const std::filesystem::path& path);

}  // namespace hamsurf
