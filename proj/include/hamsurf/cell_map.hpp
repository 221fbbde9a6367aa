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

#include <cstddef>
#include <optional>
#include <vector>

#include "hamsurf/complex.hpp"

namespace hamsurf {

// Image of a face. Without reflection corner i goes to corner i+shift of
// `face`; with reflection it goes to corner shift-i (indices mod face size).
struct FaceImage {
  FaceId face;
  int shift = 0;
  bool reflected = false;

  auto operator<=>(const FaceImage&) const = default;
};

// Cellular map between two complexes, given on every cell.
struct CellMap {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // oriented edges
  std::vector<FaceImage> faces;

  auto operator<=>(const CellMap&) const = default;
};

// Corner of the image face that corner `position` of a face of size n maps to.
int image_corner(const FaceImage& image, int position, int n);
// Image of boundary[position] of a face of size n, read in the target face.
EdgeId image_boundary_edge(const Complex2& target, const FaceImage& image, int position, int n);

CellMap identity_map(const Complex2& c);

// second after first; `middle` is the target of first.
CellMap compose(const CellMap& second, const CellMap& first, const Complex2& middle);

// Checks incidence, reversal, kinds and corner labels. A bijective map that
// passes is an isomorphism.
bool is_cellular(const Complex2& src, const Complex2& dst, const CellMap& map);
bool is_isomorphism(const Complex2& src, const Complex2& dst, const CellMap& map);

// Extends images of the forward edges (one per geometric edge, in pair order)
// to vertices, reverse edges and faces. nullopt when the edge images are not
// induced by a cellular map.
std::optional<CellMap> complete_from_edges(const Complex2& src, const Complex2& dst,
                                           const std::vector<EdgeId>& forward_images);

struct IsoSearchStats {
  std::size_t seeds_tried = 0;
  std::size_t branch_points = 0;  // sides with more than one admissible image
};

// Isomorphisms found by propagating face images across edges, starting from
// `seed` (a source face and its image) or from every possible image of the
// first face. Stops after `limit` results.
std::vector<CellMap> find_isomorphisms(const Complex2& src, const Complex2& dst,
                                       std::optional<std::pair<FaceId, FaceImage>> seed,
                                       std::size_t limit, IsoSearchStats* stats = nullptr);

std::optional<CellMap> find_isomorphism(const Complex2& src, const Complex2& dst,
                                        std::optional<std::pair<FaceId, FaceImage>> seed =
                                            std::nullopt,
                                        IsoSearchStats* stats = nullptr);

// All automorphisms, sorted.
std::vector<CellMap> automorphisms(const Complex2& c, IsoSearchStats* stats = nullptr);

}  // namespace hamsurf
