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

#include "hamsurf/quotient.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hamsurf {

std::vector<Violation> validate_quotient_charts(const ChartData& data) {
  std::vector<Violation> out;
  auto fail = [&](std::string cell, std::string message) {
    out.push_back(Violation{std::move(cell), std::move(message)});
  };
  std::set<std::string> vertices;
  for (const auto& e : data.edges) {
    vertices.insert(e.from);
    vertices.insert(e.to);
  }
  if (data.edges.size() != 12) fail("charts", fmt::format("{} edge symbols, expected 12", data.edges.size()));
  if (vertices.size() != 3) fail("charts", fmt::format("{} vertices, expected 3", vertices.size()));
  int triangles = 0;
  int lozenges = 0;
  for (const auto& f : data.faces) ++(f.kind == FaceKind::kTriangle ? triangles : lozenges);
  if (triangles != 4) fail("charts", fmt::format("{} triangles, expected 4", triangles));
  if (lozenges != 6) fail("charts", fmt::format("{} lozenges, expected 6", lozenges));

  std::map<std::string, const ChartFace*> faces;
  for (const auto& f : data.faces) faces[f.id] = &f;
  auto usage = [&](const std::vector<std::string>& ids) {
    std::map<std::string, int> count;
    for (const auto& e : data.edges) count[e.symbol] = 0;
    for (const auto& id : ids) {
      auto it = faces.find(id);
      if (it == faces.end()) continue;
      for (const auto& l : it->second->word) ++count[l.symbol];
    }
    return count;
  };
  std::vector<std::string> all_ids;
  for (const auto& f : data.faces) all_ids.push_back(f.id);
  for (const auto& [symbol, n] : usage(all_ids)) {
    if (n != 3) fail(symbol, fmt::format("used {} times in V, expected 3", n));
  }
  for (const char* name : {"S", "S'"}) {
    const ChartSurface* s = data.find_surface(name);
    if (!s) {
      fail(name, "surface record missing");
      continue;
    }
    for (const auto& [symbol, n] : usage(s->faces)) {
      if (n != 2) fail(symbol, fmt::format("used {} times in {}, expected 2", n, name));
    }
  }
  return out;
}

std::vector<std::string> surface_face_names(const ChartData& data, const std::string& surface) {
  const ChartSurface* s = data.find_surface(surface);
  if (!s) throw std::out_of_range(fmt::format("no surface record '{}'", surface));
  return s->faces;
}

Complex2 build_surface(const ChartData& data, const std::string& surface) {
  const auto names = surface_face_names(data, surface);
  ChartData restricted;
  restricted.edges = data.edges;
  for (const auto& f : data.faces) {
    if (std::find(names.begin(), names.end(), f.id) != names.end()) restricted.faces.push_back(f);
  }
  return build_complex(restricted);
}

Complex2 build_S(const ChartData& data) { return build_surface(data, "S"); }
Complex2 build_Sprime(const ChartData& data) { return build_surface(data, "S'"); }

Complex2 build_V(const ChartData& data) {
  ChartData all = data;
  all.surfaces.clear();
  return build_complex(all);
}

int link_circle_length(const Complex2& c, VertexId v) {
  const LinkGraph link = vertex_link(c, v);
  const auto& g = link.graph;
  bool cycle = g.node_count() > 0 && g.connected();
  for (int n = 0; n < g.node_count() && cycle; ++n) cycle = g.degree(n) == 2;
  if (!cycle) {
    throw std::invalid_argument(
        fmt::format("link of {} is not a single cycle", c.vertex_name(v)));
  }
  int total = 0;
  for (const auto& e : g.edges()) total += weight(*e.label);
  return total;
}

std::vector<FlatPiece> flat_piece_census(const Complex2& v) {
  std::vector<FlatPiece> out;
  for (const char* name : {"x", "y", "z"}) {
    const std::vector<std::string> pair{name, std::string(name) + "'"};
    const auto faces = faces_by_name(v, pair);
    out.push_back(FlatPiece{pair[0], pair[1], surface_report(subcomplex(v, faces).complex)});
  }
  return out;
}

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

class EdgeImageSearch {
 public:
  explicit EdgeImageSearch(const Complex2& c) : c_(c) {
    std::vector<char> placed(c.unoriented_edge_count(), 0);
    for (FaceId f : c.faces()) {
      for (EdgeId e : c.face(f).boundary) {
        if (!placed[e.index() / 2]) {
          placed[e.index() / 2] = 1;
          order_.push_back(static_cast<int>(e.index() / 2));
        }
      }
      completes_.resize(order_.size());
      if (!order_.empty()) completes_[order_.size() - 1].push_back(f);
    }
    for (std::size_t k = 0; k < placed.size(); ++k) {
      if (!placed[k]) order_.push_back(static_cast<int>(k));
    }
    completes_.resize(order_.size());
  }

  std::vector<CellMap> run() {
    images_.assign(c_.unoriented_edge_count(), EdgeId());
    vertex_.assign(c_.vertex_count(), VertexId());
    vertex_used_.assign(c_.vertex_count(), 0);
    edge_used_.assign(c_.unoriented_edge_count(), 0);
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  EdgeId image(EdgeId e) const {
    const EdgeId forward = images_[e.index() / 2];
    return e.index() % 2 == 0 ? forward : c_.reverse(forward);
  }

  bool face_has_image(FaceId f) const {
    const Face& face = c_.face(f);
    const int n = face.size();
    for (FaceId g : c_.faces()) {
      const Face& target = c_.face(g);
      if (target.kind != face.kind || target.size() != n) continue;
      for (bool reflected : {false, true}) {
        for (int shift = 0; shift < n; ++shift) {
          const FaceImage img{g, shift, reflected};
          bool ok = true;
          for (int p = 0; p < n && ok; ++p) {
            ok = target.corners[image_corner(img, p, n)] == face.corners[p] &&
                 image_boundary_edge(c_, img, p, n) == image(face.boundary[p]);
          }
          if (ok) return true;
        }
      }
    }
    return false;
  }

  bool bind(VertexId v, VertexId w, std::vector<VertexId>& bound) {
    if (vertex_[v.index()].valid()) return vertex_[v.index()] == w;
    if (vertex_used_[w.index()]) return false;
    vertex_[v.index()] = w;
    vertex_used_[w.index()] = 1;
    bound.push_back(v);
    return true;
  }

  void extend(std::size_t step) {
    if (step == order_.size()) {
      auto m = complete_from_edges(c_, c_, images_);
      if (m && is_isomorphism(c_, c_, *m)) found_.push_back(*m);
      return;
    }
    const int k = order_[step];
    const EdgeId e(2 * k);
    for (std::size_t i = 0; i < c_.edge_count(); ++i) {
      const EdgeId target(i);
      if (edge_used_[i / 2]) continue;
      std::vector<VertexId> bound;
      const bool ok = bind(c_.source(e), c_.source(target), bound) &&
                      bind(c_.target(e), c_.target(target), bound);
      if (ok) {
        images_[k] = target;
        edge_used_[i / 2] = 1;
        bool faces_ok = true;
        for (FaceId f : completes_[step]) faces_ok = faces_ok && face_has_image(f);
        if (faces_ok) extend(step + 1);
        edge_used_[i / 2] = 0;
        images_[k] = EdgeId();
      }
      for (VertexId v : bound) {
        vertex_used_[vertex_[v.index()].index()] = 0;
        vertex_[v.index()] = VertexId();
      }
    }
  }

  const Complex2& c_;
  std::vector<int> order_;
  std::vector<std::vector<FaceId>> completes_;
  std::vector<EdgeId> images_;
  std::vector<VertexId> vertex_;
  std::vector<char> vertex_used_;
  std::vector<char> edge_used_;
  std::vector<CellMap> found_;
};

}  // namespace

std::vector<CellMap> automorphism_group(const Complex2& v) { return EdgeImageSearch(v).run(); }

bool is_identity(const CellMap& map) {
  for (std::size_t i = 0; i < map.vertices.size(); ++i) {
    if (map.vertices[i].index() != i) return false;
  }
  for (std::size_t i = 0; i < map.edges.size(); ++i) {
    if (map.edges[i].index() != i) return false;
  }
  for (std::size_t i = 0; i < map.faces.size(); ++i) {
    const auto& f = map.faces[i];
    if (f.face.index() != i || f.reflected || f.shift != 0) return false;
  }
  return true;
}

std::vector<CellMap> generate_group(const Complex2& c, const std::vector<CellMap>& generators) {
  std::set<CellMap> group{identity_map(c)};
  std::vector<CellMap> frontier{identity_map(c)};
  while (!frontier.empty()) {
    std::vector<CellMap> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators) {
        CellMap h = compose(s, g, c);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::vector<EdgeSwap> theta_table(int index) {
  switch (index) {
    case 1:
      return {{"x_a", "x_d"}, {"x_b", "x_c"}, {"y_a", "y_d"}, {"y_b", "y_c"},
              {"z_a", "z_d"}, {"z_b", "z_c"}};
    case 2:
      return {{"x_a", "y_a", true}, {"x_c", "y_b", true}, {"x_b", "y_c", true},
              {"x_d", "y_d", true}, {"z_a", "z_a", true}, {"z_b", "z_c", true},
              {"z_d", "z_d", true}};
    case 3:
      return {{"x_a", "x_b"}, {"x_c", "x_d"}, {"y_a", "y_b"}, {"y_c", "y_d"},
              {"z_a", "z_b"}, {"z_c", "z_d"}};
    default:
      throw std::out_of_range(fmt::format("no theta table {}", index));
  }
}

std::optional<CellMap> map_from_table(const Complex2& c, const std::vector<EdgeSwap>& table) {
  std::vector<EdgeId> images;
  for (std::size_t k = 0; k < c.unoriented_edge_count(); ++k) images.emplace_back(2 * k);
  for (const auto& swap : table) {
    const auto a = c.find_edge(swap.a);
    const auto b = c.find_edge(swap.b);
    if (!a || !b) return std::nullopt;
    images[a->index() / 2] = swap.inverted ? c.reverse(*b) : *b;
    images[b->index() / 2] = swap.inverted ? c.reverse(*a) : *a;
  }
  auto m = complete_from_edges(c, c, images);
  if (!m || !is_isomorphism(c, c, *m)) return std::nullopt;
  return m;
}

std::vector<FaceAction> face_action(const Complex2& c, const CellMap& map) {
  std::vector<FaceAction> out;
  for (FaceId f : c.faces()) {
    const FaceImage& img = map.faces[f.index()];
    out.push_back(FaceAction{c.face(f).name, c.face(img.face).name,
                             mod(img.shift, c.face(f).size()), img.reflected});
  }
  return out;
}

std::vector<std::string> image_of_faces(const Complex2& c, const CellMap& map,
                                        const std::vector<std::string>& faces) {
  std::vector<std::string> out;
  for (FaceId f : faces_by_name(c, faces)) out.push_back(c.face(map.faces[f.index()].face).name);
  std::sort(out.begin(), out.end());
  return out;
}

ThetaReport verify_theta_relations(const Complex2& v, const std::vector<CellMap>& group,
                                   const std::vector<std::string>& s_faces,
                                   const std::vector<std::string>& sprime_faces) {
  ThetaReport r;
  std::vector<CellMap> thetas;
  for (int i = 1; i <= 3; ++i) {
    auto m = map_from_table(v, theta_table(i));
    if (!m) return r;
    thetas.push_back(*m);
  }
  r.all_defined = true;
  const std::set<CellMap> members(group.begin(), group.end());
  r.all_in_group = std::all_of(thetas.begin(), thetas.end(),
                               [&](const CellMap& t) { return members.count(t) > 0; });
  r.all_involutions = std::all_of(thetas.begin(), thetas.end(), [&](const CellMap& t) {
    return is_identity(compose(t, t, v));
  });
  r.pairwise_commute = true;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = i + 1; j < thetas.size(); ++j) {
      if (compose(thetas[i], thetas[j], v) != compose(thetas[j], thetas[i], v)) {
        r.pairwise_commute = false;
      }
    }
  }
  r.group_abelian = true;
  r.exponent_two = true;
  for (const auto& g : group) {
    if (!is_identity(compose(g, g, v))) r.exponent_two = false;
    for (const auto& h : group) {
      if (compose(g, h, v) != compose(h, g, v)) r.group_abelian = false;
    }
  }
  const auto generated = generate_group(v, thetas);
  r.generated_order = generated.size();
  r.generates_group = std::set<CellMap>(generated.begin(), generated.end()) == members;
  auto sorted = [](std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    return names;
  };
  r.theta2_swaps_surfaces = image_of_faces(v, thetas[1], s_faces) == sorted(sprime_faces) &&
                            image_of_faces(v, thetas[1], sprime_faces) == sorted(s_faces);
  for (const auto& t : thetas) r.actions.push_back(face_action(v, t));
  r.theta3_rotates_every_lozenge = true;
  for (FaceId f : v.faces()) {
    if (v.face(f).kind != FaceKind::kLozenge) continue;
    const FaceImage& img = thetas[2].faces[f.index()];
    if (img.face != f || img.reflected || mod(img.shift, 4) != 2) {
      r.theta3_rotates_every_lozenge = false;
    }
  }
  return r;
}

}  // namespace hamsurf
