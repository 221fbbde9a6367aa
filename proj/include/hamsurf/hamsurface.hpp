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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamsurf/cell_map.hpp"
#include "hamsurf/complex.hpp"
#include "hamsurf/cover.hpp"
#include "hamsurf/hamgraph.hpp"

namespace hamsurf {

// Sorted face ids.
using FaceSet = std::vector<FaceId>;

// The cells a surface predicate quantifies over: every cell of a closed
// complex, or the interior cells of a ball. Domain faces are those with a
// constrained corner; faces outside the domain are never members.
struct SurfaceAmbient {
  const Complex2* complex = nullptr;
  std::vector<char> vertex_constrained;
  std::vector<char> edge_constrained;  // per geometric edge
  std::vector<char> face_in_domain;

  static SurfaceAmbient whole(const Complex2& c);
  static SurfaceAmbient interior(const Ball& ball);
};

struct SurfaceVerdict {
  bool ok = false;
  std::string reason;
  std::optional<VertexId> vertex;
  std::optional<std::size_t> edge;  // geometric edge index
};

// Every constrained edge lies in exactly two member faces and the members
// are connected through shared edges.
SurfaceVerdict is_enveloping(const SurfaceAmbient& ambient, const FaceSet& members);

// Enveloping, and at every constrained vertex the member corners trace one
// Hamiltonian cycle of the link.
SurfaceVerdict is_hamiltonian(const SurfaceAmbient& ambient, const FaceSet& members);

struct VertexTrace {
  VertexId vertex;
  std::optional<HamCycle> cycle;  // set when the trace is a Hamiltonian cycle
  std::optional<CycleType> type;
  std::vector<AngleLabel> labels;  // around the cycle
  bool subword_rule = false;
};

// Traces at constrained vertices.
std::vector<VertexTrace> vertex_traces(const SurfaceAmbient& ambient, const FaceSet& members);

// In a cyclic label word, every l-t (read either way) continues with L.
bool lt_extends_to_ltL(const std::vector<AngleLabel>& cyclic);

// Member lozenges on the three edges of a triangle: exactly one per edge,
// and their large corners sit at three distinct vertices of the triangle.
// Throws std::invalid_argument when `triangle` is not a triangle.
bool shuriken_check(const Complex2& c, FaceId triangle, const FaceSet& members);

// When two edges of the triangle carry one member lozenge each, with large
// corners at two distinct vertices, the unique lozenge on the third edge
// whose large corner sits at the remaining vertex.
std::optional<FaceId> shuriken_completion(const Complex2& c, FaceId triangle,
                                          const FaceSet& members);

enum class LocalChoice { kA, kB };

enum class PropagationStatus { kSurface, kContradiction, kUndetermined };

std::string_view to_string(PropagationStatus status);

struct PropagationOptions {
  // Process the worklist in a random order drawn from this seed instead of
  // smallest id first.
  std::optional<std::uint64_t> shuffle_seed;
};

struct PropagationResult {
  PropagationStatus status = PropagationStatus::kUndetermined;
  FaceSet members;
  VertexId anchor;
  std::optional<VertexId> blocking_vertex;
  std::optional<std::size_t> blocking_edge;
  std::vector<std::string> trail;
  std::size_t forced = 0;
  std::size_t undetermined = 0;
};

// Seeds the anchor (smallest constrained corner of the seed lozenge) with
// one of its two Type3 link cycles: choice A is the one through the seed
// corner, choice B the other. Then forces faces until nothing changes.
PropagationResult propagate_surface(const SurfaceAmbient& ambient, FaceId seed,
                                    LocalChoice choice, const PropagationOptions& options = {});

enum class TraceMode { kType3, kAnyHamiltonian };

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes);
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct ExhaustiveResult {
  std::vector<FaceSet> surfaces;  // sorted
  std::uint64_t nodes = 0;
};

constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Backtracking over in/out for every domain face with coverage and
// link-trace pruning.
ExhaustiveResult count_surfaces_exhaustive(const SurfaceAmbient& ambient,
                                           TraceMode mode = TraceMode::kType3,
                                           std::uint64_t budget = kDefaultBudget);

// Ball version; throws std::invalid_argument above max_radius.
ExhaustiveResult count_surfaces_exhaustive(const Ball& ball, TraceMode mode = TraceMode::kType3,
                                           std::uint64_t budget = kDefaultBudget,
                                           int max_radius = 2);

enum class Periodicity { kS, kSprime, kNeither };

std::string_view to_string(Periodicity p);

struct PeriodicityResult {
  Periodicity verdict = Periodicity::kNeither;
  std::vector<std::string> image;  // sorted face names in the quotient
};

// Pushes the members through `covering` and compares with the named face sets.
PeriodicityResult periodicity_check(const Complex2& quotient, const CellMap& covering,
                                    const FaceSet& members,
                                    const std::vector<std::string>& s_faces,
                                    const std::vector<std::string>& sprime_faces);

}  // namespace hamsurf
