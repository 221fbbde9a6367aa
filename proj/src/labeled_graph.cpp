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

#include "hamsurf/labeled_graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace hamsurf {

std::optional<AngleLabel> parse_angle_label(std::string_view text) {
  if (text == "t" || text == "triangle") return AngleLabel::kTriangle;
  if (text == "l" || text == "small") return AngleLabel::kSmall;
  if (text == "L" || text == "large") return AngleLabel::kLarge;
  return std::nullopt;
}

LabeledGraph::LabeledGraph(int node_count) {
  for (int i = 0; i < node_count; ++i) add_node();
}

int LabeledGraph::add_node(std::string name) {
  const int id = node_count();
  names_.push_back(name.empty() ? std::to_string(id) : std::move(name));
  adjacency_.emplace_back();
  return id;
}

int LabeledGraph::add_edge(int u, int v, std::optional<AngleLabel> label,
                           bool rung) {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) {
    throw std::out_of_range(fmt::format("edge {}-{}: unknown node", u, v));
  }
  if (u == v) {
    throw std::invalid_argument(fmt::format("self-loop at node {}", u));
  }
  const int id = edge_count();
  edges_.push_back(GraphEdge{u, v, label, rung});
  adjacency_[u].push_back(id);
  adjacency_[v].push_back(id);
  return id;
}

void LabeledGraph::set_rung(int edge, bool rung) { edges_.at(edge).rung = rung; }

std::optional<int> LabeledGraph::find_node(std::string_view name) const {
  for (int i = 0; i < node_count(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool LabeledGraph::fully_labeled() const {
  for (const auto& e : edges_) {
    if (!e.label) return false;
  }
  return true;
}

bool LabeledGraph::connected() const {
  if (node_count() == 0) return true;
  std::vector<char> seen(node_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int n = stack.back();
    stack.pop_back();
    for (int e : adjacency_[n]) {
      const int m = edges_[e].other(n);
      if (!seen[m]) {
        seen[m] = 1;
        ++reached;
        stack.push_back(m);
      }
    }
  }
  return reached == node_count();
}

GraphParseError::GraphParseError(int line, const std::string& message)
    : std::runtime_error(fmt::format("line {}: {}", line, message)), line_(line) {}

LabeledGraph parse_graph(std::string_view text) {
  LabeledGraph g;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto node_of = [&](const std::string& name) {
    auto n = g.find_node(name);
    if (!n) throw GraphParseError(line_no, fmt::format("unknown node '{}'", name));
    return *n;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    std::vector<std::string> args;
    for (std::string a; fields >> a;) args.push_back(a);
    if (keyword == "node") {
      if (args.size() != 1) throw GraphParseError(line_no, "expected: node <id>");
      if (g.find_node(args[0])) {
        throw GraphParseError(line_no, fmt::format("duplicate node '{}'", args[0]));
      }
      g.add_node(args[0]);
    } else if (keyword == "edge") {
      if (args.size() != 2 && args.size() != 3) {
        throw GraphParseError(line_no, "expected: edge <id1> <id2> [label]");
      }
      std::optional<AngleLabel> label;
      if (args.size() == 3) {
        label = parse_angle_label(args[2]);
        if (!label) throw GraphParseError(line_no, fmt::format("bad label '{}'", args[2]));
      }
      const int u = node_of(args[0]);
      const int v = node_of(args[1]);
      if (u == v) throw GraphParseError(line_no, "self-loop");
      g.add_edge(u, v, label);
    } else if (keyword == "rung") {
      if (args.size() != 2) throw GraphParseError(line_no, "expected: rung <id1> <id2>");
      const int u = node_of(args[0]);
      const int v = node_of(args[1]);
      bool found = false;
      for (int e : g.incident(u)) {
        if (g.edge(e).other(u) == v && !g.edge(e).rung) {
          g.set_rung(e);
          found = true;
          break;
        }
      }
      if (!found) throw GraphParseError(line_no, "rung does not match an edge");
    } else {
      throw GraphParseError(line_no, fmt::format("unknown record '{}'", keyword));
    }
  }
  return g;
}

LabeledGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace hamsurf
