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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hamsurf/angle.hpp"
#include "hamsurf/ids.hpp"
#include "hamsurf/labeled_graph.hpp"

namespace hamsurf {

enum class FaceKind : uint8_t { kTriangle, kLozenge };

std::string_view to_string(FaceKind kind);

struct OrientedEdge {
  std::string name;
  VertexId source;
  VertexId target;
  EdgeId reverse;
  bool forward = true;  // the declared orientation of its pair
};

// A face is a closed boundary word of oriented edges. Corner i sits at the
// source of boundary[i], between boundary[i-1] and boundary[i].
struct Face {
  std::string name;
  FaceKind kind = FaceKind::kTriangle;
  std::vector<EdgeId> boundary;
  std::vector<AngleLabel> corners;

  int size() const { return static_cast<int>(boundary.size()); }
};

struct FaceCorner {
  FaceId face;
  int position = 0;

  auto operator<=>(const FaceCorner&) const = default;
};

// One occurrence of an (unoriented) edge in a face boundary.
struct FaceSide {
  FaceId face;
  int position = 0;
  bool same_direction = true;  // boundary[position] is the forward edge of the pair
};

// Default corner labels: t,t,t for triangles; l,L,l,L for lozenges.
std::vector<AngleLabel> default_corner_labels(FaceKind kind);

// Combinatorial 2-complex of triangles and lozenges. Immutable once built;
// use Complex2Builder to construct one.
class Complex2 {
 public:
  std::size_t vertex_count() const { return vertex_names_.size(); }
  // Oriented edges; twice the number of geometric edges.
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t unoriented_edge_count() const { return edges_.size() / 2; }
  std::size_t face_count() const { return faces_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v.index()); }
  const OrientedEdge& edge(EdgeId e) const { return edges_.at(e.index()); }
  const Face& face(FaceId f) const { return faces_.at(f.index()); }

  VertexId source(EdgeId e) const { return edge(e).source; }
  VertexId target(EdgeId e) const { return edge(e).target; }
  EdgeId reverse(EdgeId e) const { return edge(e).reverse; }

  // Vertex at corner `position` of face f.
  VertexId corner_vertex(FaceId f, int position) const;
  AngleLabel corner_label(const FaceCorner& c) const;

  // Oriented edges leaving v (the edge-germs at v).
  std::span<const EdgeId> germs_at(VertexId v) const { return germs_.at(v.index()); }
  std::span<const FaceCorner> corners_at(VertexId v) const { return corners_.at(v.index()); }
  // Face sides on the geometric edge of e, in face order.
  std::span<const FaceSide> sides_of(EdgeId e) const { return sides_.at(e.index() / 2); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  // Matches the declared (forward) name of a pair.
  std::optional<EdgeId> find_edge(std::string_view name) const;
  std::optional<FaceId> find_face(std::string_view name) const;

  std::vector<VertexId> vertices() const;
  std::vector<FaceId> faces() const;

 private:
  friend class Complex2Builder;

  void index();

  std::vector<std::string> vertex_names_;
  std::vector<OrientedEdge> edges_;
  std::vector<Face> faces_;
  std::vector<std::vector<EdgeId>> germs_;
  std::vector<std::vector<FaceCorner>> corners_;
  std::vector<std::vector<FaceSide>> sides_;
  std::unordered_map<std::string, VertexId> vertex_by_name_;
  std::unordered_map<std::string, EdgeId> edge_by_name_;
  std::unordered_map<std::string, FaceId> face_by_name_;
};

class Complex2Builder {
 public:
  VertexId add_vertex(std::string name);
  // Adds the pair (e, reverse e) and returns the forward edge.
  EdgeId add_edge(std::string name, VertexId from, VertexId to);
  // Corner labels default to default_corner_labels(kind).
  FaceId add_face(std::string name, FaceKind kind, std::vector<EdgeId> boundary,
                  std::optional<std::vector<AngleLabel>> corners = std::nullopt);

  // Incidence indexes are derived here. No validation: malformed faces are
  // kept so that validate_complex can report them.
  Complex2 build() &&;

 private:
  Complex2 complex_;
};

struct Violation {
  std::string cell;
  std::string message;
};

std::vector<Violation> validate_complex(const Complex2& c);

// Link of v: one node per edge-germ (indexed like germs_at(v)), one labeled
// link edge per face corner at v.
struct LinkGraph {
  VertexId vertex;
  LabeledGraph graph;
  std::vector<EdgeId> germs;         // node -> germ
  std::vector<FaceCorner> corners;   // link edge -> face corner
};

LinkGraph vertex_link(const Complex2& c, VertexId v);

// Number of face sides on the geometric edge of e, with multiplicity.
int edge_face_degree(const Complex2& c, EdgeId e);

struct SurfaceReport {
  bool is_closed_surface = false;
  int euler_characteristic = 0;
  bool orientable = false;
  int components = 0;
  // Genus when orientable, number of crosscaps otherwise. Only set for
  // connected closed surfaces.
  std::optional<int> genus_or_crosscaps;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 0;
};

SurfaceReport surface_report(const Complex2& c);

// Closed subcomplex spanned by `faces`, keeping cell names and recording
// where every cell came from.
struct Subcomplex {
  Complex2 complex;
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
  std::vector<FaceId> face_origin;
};

Subcomplex subcomplex(const Complex2& c, std::span<const FaceId> faces);

// Faces by name; throws std::out_of_range on unknown names.
std::vector<FaceId> faces_by_name(const Complex2& c,
                                  std::span<const std::string> names);

}  // namespace hamsurf
