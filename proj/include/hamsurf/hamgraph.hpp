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

#include <optional>
#include <string_view>
#include <vector>

#include "hamsurf/labeled_graph.hpp"

namespace hamsurf {

struct LabelCounts {
  int t = 0;
  int small = 0;
  int large = 0;
  int unlabeled = 0;

  int angular_length() const { return t + small + 2 * large; }
  auto operator<=>(const LabelCounts&) const = default;
};

// A Hamiltonian cycle in canonical form: it starts at node 0 and runs in the
// direction whose second node is smaller. edges[i] joins nodes[i] and
// nodes[i+1] (cyclically).
struct HamCycle {
  std::vector<int> nodes;
  std::vector<int> edges;
  int rung_count = 0;
  LabelCounts labels;

  auto operator<=>(const HamCycle& other) const {
    if (auto c = nodes <=> other.nodes; c != 0) return c;
    return edges <=> other.edges;
  }
  bool operator==(const HamCycle& other) const {
    return nodes == other.nodes && edges == other.edges;
  }
};

enum class CycleType { kType1, kType2, kType3, kOther };

std::string_view to_string(CycleType type);

// All Hamiltonian cycles, sorted by canonical form. Exhaustive backtracking
// with degree and connectivity pruning. Throws std::invalid_argument for
// graphs with fewer than 3 nodes or that are disconnected.
std::vector<HamCycle> enumerate_hamiltonian_cycles(const LabeledGraph& g);

// Builds the cycle record (canonical form, rung and label counts) for an edge
// set that forms a Hamiltonian cycle of g; nullopt otherwise.
std::optional<HamCycle> cycle_from_edges(const LabeledGraph& g, std::vector<int> edges);

// Moebius ladder on four rungs: rim 0-1-...-7-0 labeled l,t,l,t,...,
// rungs k -- k+4 labeled L.
LabeledGraph moebius_ladder_L();

// Throws std::invalid_argument when the cycle has unlabeled edges.
CycleType classify_cycle(const HamCycle& cycle);

// First label-preserving isomorphism g1 -> g2 (node map) in search order.
std::optional<std::vector<int>> labeled_isomorphic(const LabeledGraph& g1,
                                                   const LabeledGraph& g2);

// Minimum total label weight over cycles, in units of pi/3; nullopt for a
// forest. Throws std::invalid_argument on unlabeled edges.
std::optional<int> angular_girth(const LabeledGraph& g);

// Number of listed cycles through each edge.
std::vector<int> cycles_per_edge(const LabeledGraph& g, const std::vector<HamCycle>& cycles);

// Rung structure of a ladder cycle. Rungs are the edges flagged as rungs.
struct RungReport {
  std::vector<int> used;
  std::vector<int> omitted;
  // Rim-edge counts of the cycle segments between consecutive used rungs.
  std::vector<int> segments;
  // Every pair of omitted rungs has its endpoints joined by two rim edges.
  bool omitted_consecutive = false;
  // Every segment between used rungs has exactly three rim edges.
  bool used_at_distance_three = false;
};

RungReport rung_report(const LabeledGraph& g, const HamCycle& cycle);

// True when the graph has an automorphism taking node 0 to every other node
// (labels ignored).
bool vertex_transitive(const LabeledGraph& g);

}  // namespace hamsurf
