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

#include <string>
#include <vector>

#include "hamsurf/cell_map.hpp"
#include "hamsurf/chart.hpp"
#include "hamsurf/complex.hpp"

namespace hamsurf {

// Structural checks on the chart data for V: 12 edge symbols on 3 vertices,
// 4 triangles, 6 lozenges, surfaces S and S' present, each edge used twice in
// each surface and three times overall.
std::vector<Violation> validate_quotient_charts(const ChartData& data);

// Complex spanned by the faces of a named surface record, with all edges.
Complex2 build_surface(const ChartData& data, const std::string& surface);
Complex2 build_S(const ChartData& data);
Complex2 build_Sprime(const ChartData& data);
Complex2 build_V(const ChartData& data);

// Face names of a surface record; throws std::out_of_range when missing.
std::vector<std::string> surface_face_names(const ChartData& data, const std::string& surface);

// Total corner weight around v. Throws std::invalid_argument when the link
// of v is not a single cycle.
int link_circle_length(const Complex2& c, VertexId v);

struct FlatPiece {
  std::string first;
  std::string second;
  SurfaceReport report;
};

// The unions x+x', y+y', z+z'.
std::vector<FlatPiece> flat_piece_census(const Complex2& v);

// Exhaustive backtracking over images of the forward edges, completed to
// cellular maps. Sorted.
std::vector<CellMap> automorphism_group(const Complex2& v);

// Closure of the generators under composition.
std::vector<CellMap> generate_group(const Complex2& c, const std::vector<CellMap>& generators);

// Symbol-level description of a map: a <-> b, optionally reversing
// orientation. Unlisted symbols are fixed.
struct EdgeSwap {
  std::string a;
  std::string b;
  bool inverted = false;
};

std::vector<EdgeSwap> theta_table(int index);  // index 1, 2 or 3

// The map given by a symbol table, completed to faces; nullopt when the
// table does not define a cellular map of c.
std::optional<CellMap> map_from_table(const Complex2& c, const std::vector<EdgeSwap>& table);

struct FaceAction {
  std::string face;
  std::string image;
  int shift = 0;
  bool reflected = false;
};

std::vector<FaceAction> face_action(const Complex2& c, const CellMap& map);

// Image of a set of face names, sorted.
std::vector<std::string> image_of_faces(const Complex2& c, const CellMap& map,
                                        const std::vector<std::string>& faces);

bool is_identity(const CellMap& map);

struct ThetaReport {
  bool all_defined = false;       // every table gives a cellular automorphism
  bool all_in_group = false;
  bool all_involutions = false;   // each theta squares to the identity
  bool pairwise_commute = false;  // thetas commute pairwise
  bool group_abelian = false;
  bool exponent_two = false;      // every group element squares to the identity
  std::size_t generated_order = 0;
  bool generates_group = false;
  bool theta2_swaps_surfaces = false;
  // theta3 sends every lozenge to itself by a half-turn.
  bool theta3_rotates_every_lozenge = false;
  std::vector<std::vector<FaceAction>> actions;  // per theta
};

ThetaReport verify_theta_relations(const Complex2& v, const std::vector<CellMap>& group,
                                   const std::vector<std::string>& s_faces,
                                   const std::vector<std::string>& sprime_faces);

}  // namespace hamsurf
