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

#include <stdexcept>
#include <string>
#include <vector>

#include "hamsurf/cell_map.hpp"
#include "hamsurf/complex.hpp"

namespace hamsurf {

// Finite ball B_n of the universal cover of a quotient complex. Every face is
// a copy of a quotient face aligned with it (shift 0, no reflection).
struct Ball {
  Complex2 complex;
  int radius = 0;
  VertexId base;
  CellMap covering;
  std::vector<int> vertex_depth;
  std::vector<int> edge_depth;  // per geometric edge
  std::vector<int> face_depth;
  // A vertex is interior when its star is complete, an edge when all faces
  // of its image are present, a face when all its edges are interior.
  std::vector<char> vertex_interior;
  std::vector<char> edge_interior;  // per geometric edge
  std::vector<char> face_interior;
  std::size_t attached = 0;  // faces attached by the last expansion
  std::size_t folds = 0;     // identifications made by the last expansion
};

class FoldConflict : public std::runtime_error {
 public:
  explicit FoldConflict(std::vector<std::string> trail);
  const std::vector<std::string>& trail() const { return trail_; }

 private:
  std::vector<std::string> trail_;
};

Ball base_ball(const Complex2& quotient, VertexId base);

// Completes the star of every vertex at depth == radius, then folds cells
// with equal images that share a germ until nothing changes. Existing cells
// keep their ids. Throws FoldConflict when a fold would identify cells with
// different images.
Ball expand_ball(const Complex2& quotient, const Ball& ball);

Ball build_ball(const Complex2& quotient, VertexId base, int radius);

// Union of the stars of vertices at depth <= radius - 1 (the base alone for
// radius 0), with ids renumbered in increasing order.
Ball restrict_to_radius(const Complex2& quotient, const Ball& ball, int radius);

// Same cells with the same ids, incidences and images.
bool same_ball(const Ball& a, const Ball& b);

// Copy without one face; flags are left as they were.
Ball remove_face(const Ball& ball, FaceId face);

struct VertexCheck {
  VertexId vertex;
  int depth = 0;
  bool interior = false;
  bool link_matches = false;  // labeled-isomorphic to the quotient link
  std::optional<int> girth;
  int triangles = 0;
  int lozenges = 0;
};

struct CoverReport {
  bool pass = false;
  std::size_t interior_vertices = 0;
  std::vector<VertexCheck> vertices;
  std::vector<std::string> violations;
};

CoverReport verify_cover(const Complex2& quotient, const Ball& ball);

struct CensusRow {
  int depth = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t triangles = 0;
  std::size_t lozenges = 0;

  auto operator<=>(const CensusRow&) const = default;
};

// Cells by exact depth.
std::vector<CensusRow> ball_census(const Ball& ball);

// Deterministic text dump: cells sorted by depth then id, images included.
std::string dump_ball(const Complex2& quotient, const Ball& ball);

// Cell isomorphism taking the base star of a onto the base star of b.
std::optional<CellMap> ball_isomorphism(const Ball& a, const Ball& b);

}  // namespace hamsurf
