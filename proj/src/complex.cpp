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

#include "hamsurf/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace hamsurf {

std::string_view to_string(FaceKind kind) {
  return kind == FaceKind::kTriangle ? "triangle" : "lozenge";
}

std::vector<AngleLabel> default_corner_labels(FaceKind kind) {
  if (kind == FaceKind::kTriangle) {
    return {AngleLabel::kTriangle, AngleLabel::kTriangle, AngleLabel::kTriangle};
  }
  return {AngleLabel::kSmall, AngleLabel::kLarge, AngleLabel::kSmall, AngleLabel::kLarge};
}

VertexId Complex2::corner_vertex(FaceId f, int position) const {
  return source(face(f).boundary.at(position));
}

AngleLabel Complex2::corner_label(const FaceCorner& c) const {
  return face(c.face).corners.at(c.position);
}

std::optional<VertexId> Complex2::find_vertex(std::string_view name) const {
  auto it = vertex_by_name_.find(std::string(name));
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Complex2::find_edge(std::string_view name) const {
  auto it = edge_by_name_.find(std::string(name));
  if (it == edge_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<FaceId> Complex2::find_face(std::string_view name) const {
  auto it = face_by_name_.find(std::string(name));
  if (it == face_by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Complex2::vertices() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < vertex_count(); ++i) out.emplace_back(i);
  return out;
}

std::vector<FaceId> Complex2::faces() const {
  std::vector<FaceId> out;
  for (std::size_t i = 0; i < face_count(); ++i) out.emplace_back(i);
  return out;
}

void Complex2::index() {
  germs_.assign(vertex_count(), {});
  corners_.assign(vertex_count(), {});
  sides_.assign(unoriented_edge_count(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    germs_[edges_[e].source.index()].emplace_back(e);
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& face = faces_[f];
    for (int i = 0; i < face.size(); ++i) {
      const EdgeId e = face.boundary[i];
      corners_[source(e).index()].push_back(FaceCorner{FaceId(f), i});
      sides_[e.index() / 2].push_back(FaceSide{FaceId(f), i, e.index() % 2 == 0});
    }
  }
}

VertexId Complex2Builder::add_vertex(std::string name) {
  const VertexId id(complex_.vertex_names_.size());
  complex_.vertex_by_name_.emplace(name, id);
  complex_.vertex_names_.push_back(std::move(name));
  return id;
}

EdgeId Complex2Builder::add_edge(std::string name, VertexId from, VertexId to) {
  const auto n = complex_.vertex_names_.size();
  if (!from.valid() || !to.valid() || from.index() >= n || to.index() >= n) {
    throw std::out_of_range(fmt::format("edge {}: unknown endpoint", name));
  }
  const EdgeId forward(complex_.edges_.size());
  const EdgeId backward(complex_.edges_.size() + 1);
  complex_.edge_by_name_.emplace(name, forward);
  complex_.edges_.push_back(OrientedEdge{name, from, to, backward, true});
  complex_.edges_.push_back(OrientedEdge{std::move(name), to, from, forward, false});
  return forward;
}

FaceId Complex2Builder::add_face(std::string name, FaceKind kind,
                                 std::vector<EdgeId> boundary,
                                 std::optional<std::vector<AngleLabel>> corners) {
  for (EdgeId e : boundary) {
    if (!e.valid() || e.index() >= complex_.edges_.size()) {
      throw std::out_of_range(fmt::format("face {}: unknown edge", name));
    }
  }
  const FaceId id(complex_.faces_.size());
  complex_.face_by_name_.emplace(name, id);
  std::vector<AngleLabel> labels =
      corners ? std::move(*corners) : default_corner_labels(kind);
  complex_.faces_.push_back(Face{std::move(name), kind, std::move(boundary), std::move(labels)});
  return id;
}

Complex2 Complex2Builder::build() && {
  complex_.index();
  return std::move(complex_);
}

std::vector<Violation> validate_complex(const Complex2& c) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    const EdgeId e(i);
    const auto& edge = c.edge(e);
    const std::string cell = fmt::format("edge {}{}", edge.name, edge.forward ? "" : "^-1");
    if (!edge.reverse.valid() || edge.reverse.index() >= c.edge_count()) {
      out.push_back({cell, "reverse is not an edge"});
      continue;
    }
    const auto& rev = c.edge(edge.reverse);
    if (edge.reverse == e) out.push_back({cell, "edge is its own reverse"});
    if (rev.reverse != e) out.push_back({cell, "reverse is not an involution"});
    if (rev.source != edge.target || rev.target != edge.source) {
      out.push_back({cell, "reverse does not swap endpoints"});
    }
  }
  for (FaceId f : c.faces()) {
    const Face& face = c.face(f);
    const std::string cell = fmt::format("face {}", face.name);
    const int expected = face.kind == FaceKind::kTriangle ? 3 : 4;
    if (face.size() != expected) {
      out.push_back({cell, fmt::format("{} has {} sides", to_string(face.kind), face.size())});
      continue;
    }
    if (static_cast<int>(face.corners.size()) != face.size()) {
      out.push_back({cell, "corner label count differs from boundary length"});
      continue;
    }
    for (int i = 0; i < face.size(); ++i) {
      const EdgeId cur = face.boundary[i];
      const EdgeId next = face.boundary[(i + 1) % face.size()];
      if (c.target(cur) != c.source(next)) {
        out.push_back({cell, fmt::format("boundary not closed after position {}", i)});
      }
    }
    int total = 0;
    for (AngleLabel a : face.corners) total += weight(a);
    if (face.kind == FaceKind::kTriangle) {
      const bool all_t = std::all_of(face.corners.begin(), face.corners.end(),
                                     [](AngleLabel a) { return a == AngleLabel::kTriangle; });
      if (!all_t || total != 3) out.push_back({cell, "triangle corners must be t,t,t"});
    } else {
      const auto expect = default_corner_labels(FaceKind::kLozenge);
      if (face.corners != expect || total != 6) {
        out.push_back({cell, "lozenge corners must be l,L,l,L from position 0"});
      }
    }
  }
  // Incidence indexes are rebuilt from the boundary words; check they agree.
  std::size_t corner_total = 0;
  for (VertexId v : c.vertices()) {
    for (const FaceCorner& k : c.corners_at(v)) {
      ++corner_total;
      if (c.corner_vertex(k.face, k.position) != v) {
        out.push_back({fmt::format("vertex {}", c.vertex_name(v)), "corner index disagrees"});
      }
    }
    for (EdgeId e : c.germs_at(v)) {
      if (c.source(e) != v) {
        out.push_back({fmt::format("vertex {}", c.vertex_name(v)), "germ index disagrees"});
      }
    }
  }
  std::size_t side_total = 0;
  for (FaceId f : c.faces()) side_total += c.face(f).boundary.size();
  if (corner_total != side_total) out.push_back({"complex", "corner count differs from face sides"});
  return out;
}

LinkGraph vertex_link(const Complex2& c, VertexId v) {
  if (!v.valid() || v.index() >= c.vertex_count()) {
    throw std::out_of_range("vertex_link: unknown vertex");
  }
  LinkGraph link;
  link.vertex = v;
  const auto germs = c.germs_at(v);
  link.germs.assign(germs.begin(), germs.end());
  for (EdgeId e : germs) link.graph.add_node(c.edge(e).name + (c.edge(e).forward ? "+" : "-"));
  auto node_of = [&](EdgeId e) {
    auto it = std::find(link.germs.begin(), link.germs.end(), e);
    if (it == link.germs.end()) {
      throw std::invalid_argument(
          fmt::format("vertex_link: boundary word not closed at {}", c.vertex_name(v)));
    }
    return static_cast<int>(it - link.germs.begin());
  };
  for (const FaceCorner& k : c.corners_at(v)) {
    const Face& face = c.face(k.face);
    const EdgeId incoming = face.boundary[(k.position + face.size() - 1) % face.size()];
    const int a = node_of(c.reverse(incoming));
    const int b = node_of(face.boundary[k.position]);
    link.graph.add_edge(a, b, face.corners.at(k.position));
    link.corners.push_back(k);
  }
  return link;
}

int edge_face_degree(const Complex2& c, EdgeId e) {
  if (!e.valid() || e.index() >= c.edge_count()) {
    throw std::out_of_range("edge_face_degree: unknown edge");
  }
  return static_cast<int>(c.sides_of(e).size());
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool link_is_single_cycle(const Complex2& c, VertexId v) {
  if (c.germs_at(v).empty()) return false;
  const LinkGraph link = vertex_link(c, v);
  for (int n = 0; n < link.graph.node_count(); ++n) {
    if (link.graph.degree(n) != 2) return false;
  }
  return link.graph.connected();
}

}  // namespace

SurfaceReport surface_report(const Complex2& c) {
  SurfaceReport r;
  r.vertex_count = c.vertex_count();
  r.edge_count = c.unoriented_edge_count();
  r.face_count = c.face_count();
  r.euler_characteristic = static_cast<int>(r.vertex_count) -
                           static_cast<int>(r.edge_count) +
                           static_cast<int>(r.face_count);

  DisjointSets components(c.vertex_count());
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    components.unite(c.source(EdgeId(e)).index(), c.target(EdgeId(e)).index());
  }
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (components.find(v) == v) ++r.components;
  }

  bool every_edge_two = true;
  bool some_edge_over_two = false;
  for (std::size_t k = 0; k < c.unoriented_edge_count(); ++k) {
    const auto n = c.sides_of(EdgeId(2 * k)).size();
    every_edge_two = every_edge_two && n == 2;
    some_edge_over_two = some_edge_over_two || n > 2;
  }
  bool links_ok = every_edge_two;
  for (VertexId v : c.vertices()) {
    if (!links_ok) break;
    links_ok = link_is_single_cycle(c, v);
  }
  r.is_closed_surface = every_edge_two && links_ok;

  // Propagate face orientations (+1/-1) across edges with two sides.
  bool orientable = !some_edge_over_two;
  std::vector<int> orientation(c.face_count(), 0);
  for (std::size_t start = 0; start < c.face_count() && orientable; ++start) {
    if (orientation[start] != 0) continue;
    orientation[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty() && orientable) {
      const FaceId f(stack.back());
      stack.pop_back();
      for (EdgeId e : c.face(f).boundary) {
        const auto sides = c.sides_of(e);
        if (sides.size() != 2) continue;
        const int s0 = sides[0].same_direction ? 1 : -1;
        const int s1 = sides[1].same_direction ? 1 : -1;
        const std::size_t f0 = sides[0].face.index();
        const std::size_t f1 = sides[1].face.index();
        if (f0 == f1) {
          if (s0 == s1) orientable = false;
          continue;
        }
        const std::size_t known = orientation[f0] != 0 ? f0 : f1;
        const std::size_t other = known == f0 ? f1 : f0;
        const int s_known = known == f0 ? s0 : s1;
        const int s_other = known == f0 ? s1 : s0;
        const int wanted = -orientation[known] * s_known * s_other;
        if (orientation[other] == 0) {
          orientation[other] = wanted;
          stack.push_back(other);
        } else if (orientation[other] != wanted) {
          orientable = false;
        }
      }
    }
  }
  r.orientable = orientable;
  if (r.is_closed_surface && r.components == 1) {
    r.genus_or_crosscaps = orientable ? (2 - r.euler_characteristic) / 2
                                      : 2 - r.euler_characteristic;
  }
  return r;
}

Subcomplex subcomplex(const Complex2& c, std::span<const FaceId> faces) {
  std::vector<FaceId> chosen(faces.begin(), faces.end());
  for (FaceId f : chosen) {
    if (!f.valid() || f.index() >= c.face_count()) {
      throw std::out_of_range("subcomplex: unknown face id");
    }
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  std::vector<char> keep_vertex(c.vertex_count(), 0);
  std::vector<char> keep_pair(c.unoriented_edge_count(), 0);
  for (FaceId f : chosen) {
    for (EdgeId e : c.face(f).boundary) {
      keep_pair[e.index() / 2] = 1;
      keep_vertex[c.source(e).index()] = 1;
      keep_vertex[c.target(e).index()] = 1;
    }
  }

  Subcomplex out;
  Complex2Builder builder;
  std::vector<VertexId> new_vertex(c.vertex_count());
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (!keep_vertex[v]) continue;
    new_vertex[v] = builder.add_vertex(c.vertex_name(VertexId(v)));
    out.vertex_origin.emplace_back(v);
  }
  std::vector<EdgeId> new_edge(c.edge_count());
  for (std::size_t k = 0; k < c.unoriented_edge_count(); ++k) {
    if (!keep_pair[k]) continue;
    const EdgeId fwd(2 * k);
    const EdgeId e = builder.add_edge(c.edge(fwd).name, new_vertex[c.source(fwd).index()],
                                      new_vertex[c.target(fwd).index()]);
    new_edge[2 * k] = e;
    new_edge[2 * k + 1] = EdgeId(e.value() + 1);
    out.edge_origin.push_back(fwd);
    out.edge_origin.emplace_back(2 * k + 1);
  }
  for (FaceId f : chosen) {
    const Face& face = c.face(f);
    std::vector<EdgeId> boundary;
    for (EdgeId e : face.boundary) boundary.push_back(new_edge[e.index()]);
    builder.add_face(face.name, face.kind, std::move(boundary), face.corners);
    out.face_origin.push_back(f);
  }
  out.complex = std::move(builder).build();
  return out;
}

std::vector<FaceId> faces_by_name(const Complex2& c, std::span<const std::string> names) {
  std::vector<FaceId> out;
  for (const auto& n : names) {
    auto f = c.find_face(n);
    if (!f) throw std::out_of_range(fmt::format("unknown face '{}'", n));
    out.push_back(*f);
  }
  return out;
}

}  // namespace hamsurf
