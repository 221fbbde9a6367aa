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

#include "hamsurf/cell_map.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hamsurf {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

int image_corner(const FaceImage& image, int position, int n) {
  return image.reflected ? mod(image.shift - position, n) : mod(position + image.shift, n);
}

EdgeId image_boundary_edge(const Complex2& target, const FaceImage& image, int position, int n) {
  const Face& g = target.face(image.face);
  if (!image.reflected) return g.boundary[mod(position + image.shift, n)];
  return target.reverse(g.boundary[mod(image.shift - position - 1, n)]);
}

CellMap identity_map(const Complex2& c) {
  CellMap m;
  for (std::size_t i = 0; i < c.vertex_count(); ++i) m.vertices.emplace_back(i);
  for (std::size_t i = 0; i < c.edge_count(); ++i) m.edges.emplace_back(i);
  for (std::size_t i = 0; i < c.face_count(); ++i) m.faces.push_back(FaceImage{FaceId(i), 0, false});
  return m;
}

CellMap compose(const CellMap& second, const CellMap& first, const Complex2& middle) {
  CellMap m;
  for (VertexId v : first.vertices) m.vertices.push_back(second.vertices.at(v.index()));
  for (EdgeId e : first.edges) m.edges.push_back(second.edges.at(e.index()));
  for (const FaceImage& a : first.faces) {
    const FaceImage& b = second.faces.at(a.face.index());
    const int n = middle.face(a.face).size();
    FaceImage c;
    c.face = b.face;
    c.reflected = a.reflected != b.reflected;
    if (!b.reflected) {
      c.shift = mod(a.shift + b.shift, n);
    } else {
      c.shift = mod(b.shift - a.shift, n);
    }
    m.faces.push_back(c);
  }
  return m;
}

bool is_cellular(const Complex2& src, const Complex2& dst, const CellMap& map) {
  if (map.vertices.size() != src.vertex_count() || map.edges.size() != src.edge_count() ||
      map.faces.size() != src.face_count()) {
    return false;
  }
  for (VertexId v : map.vertices) {
    if (!v.valid() || v.index() >= dst.vertex_count()) return false;
  }
  for (std::size_t i = 0; i < src.edge_count(); ++i) {
    const EdgeId e(i);
    const EdgeId img = map.edges[i];
    if (!img.valid() || img.index() >= dst.edge_count()) return false;
    if (map.edges[src.reverse(e).index()] != dst.reverse(img)) return false;
    if (dst.source(img) != map.vertices[src.source(e).index()]) return false;
    if (dst.target(img) != map.vertices[src.target(e).index()]) return false;
  }
  for (std::size_t i = 0; i < src.face_count(); ++i) {
    const Face& f = src.face(FaceId(i));
    const FaceImage& img = map.faces[i];
    if (!img.face.valid() || img.face.index() >= dst.face_count()) return false;
    const Face& g = dst.face(img.face);
    if (g.kind != f.kind || g.size() != f.size()) return false;
    const int n = f.size();
    for (int p = 0; p < n; ++p) {
      if (g.corners[image_corner(img, p, n)] != f.corners[p]) return false;
      if (image_boundary_edge(dst, img, p, n) != map.edges[f.boundary[p].index()]) return false;
    }
  }
  return true;
}

bool is_isomorphism(const Complex2& src, const Complex2& dst, const CellMap& map) {
  if (src.vertex_count() != dst.vertex_count() || src.edge_count() != dst.edge_count() ||
      src.face_count() != dst.face_count()) {
    return false;
  }
  if (!is_cellular(src, dst, map)) return false;
  auto bijective = [](const auto& images, std::size_t n) {
    std::vector<char> hit(n, 0);
    for (const auto& x : images) {
      if (hit[x.index()]) return false;
      hit[x.index()] = 1;
    }
    return true;
  };
  std::vector<FaceId> face_targets;
  for (const auto& img : map.faces) face_targets.push_back(img.face);
  return bijective(map.vertices, dst.vertex_count()) && bijective(map.edges, dst.edge_count()) &&
         bijective(face_targets, dst.face_count());
}

std::optional<CellMap> complete_from_edges(const Complex2& src, const Complex2& dst,
                                           const std::vector<EdgeId>& forward_images) {
  if (forward_images.size() != src.unoriented_edge_count()) return std::nullopt;
  CellMap m;
  m.vertices.assign(src.vertex_count(), VertexId());
  m.edges.assign(src.edge_count(), EdgeId());
  for (std::size_t k = 0; k < forward_images.size(); ++k) {
    const EdgeId img = forward_images[k];
    if (!img.valid() || img.index() >= dst.edge_count()) return std::nullopt;
    m.edges[2 * k] = img;
    m.edges[2 * k + 1] = dst.reverse(img);
  }
  for (std::size_t i = 0; i < src.edge_count(); ++i) {
    const EdgeId e(i);
    for (auto [v, w] : {std::pair{src.source(e), dst.source(m.edges[i])},
                        std::pair{src.target(e), dst.target(m.edges[i])}}) {
      VertexId& slot = m.vertices[v.index()];
      if (slot.valid() && slot != w) return std::nullopt;
      slot = w;
    }
  }
  for (VertexId v : m.vertices) {
    if (!v.valid()) return std::nullopt;
  }
  for (FaceId f : src.faces()) {
    const Face& face = src.face(f);
    const int n = face.size();
    std::optional<FaceImage> found;
    for (const FaceCorner& k : dst.corners_at(m.vertices[src.source(face.boundary[0]).index()])) {
      if (dst.face(k.face).kind != face.kind || dst.face(k.face).size() != n) continue;
      for (bool reflected : {false, true}) {
        const FaceImage img{k.face, reflected ? k.position : mod(k.position, n), reflected};
        bool ok = true;
        for (int p = 0; p < n && ok; ++p) {
          ok = dst.face(k.face).corners[image_corner(img, p, n)] == face.corners[p] &&
               image_boundary_edge(dst, img, p, n) == m.edges[face.boundary[p].index()];
        }
        if (ok) {
          found = img;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
    m.faces.push_back(*found);
  }
  return m;
}

namespace {

struct PartialMap {
  CellMap map;
  std::vector<char> vertex_used;
  std::vector<char> edge_used;
  std::vector<char> face_used;
  std::deque<FaceId> queue;
  std::size_t assigned_faces = 0;
};

class Propagator {
 public:
  Propagator(const Complex2& src, const Complex2& dst, std::size_t limit, IsoSearchStats* stats)
      : src_(src), dst_(dst), limit_(limit), stats_(stats) {}

  std::vector<CellMap> run(std::optional<std::pair<FaceId, FaceImage>> seed) {
    if (src_.vertex_count() != dst_.vertex_count() || src_.edge_count() != dst_.edge_count() ||
        src_.face_count() != dst_.face_count()) {
      return {};
    }
    PartialMap start;
    start.map.vertices.assign(src_.vertex_count(), VertexId());
    start.map.edges.assign(src_.edge_count(), EdgeId());
    start.map.faces.assign(src_.face_count(), FaceImage{});
    start.vertex_used.assign(dst_.vertex_count(), 0);
    start.edge_used.assign(dst_.edge_count(), 0);
    start.face_used.assign(dst_.face_count(), 0);
    if (src_.face_count() == 0) {
      solve(std::move(start));
      return std::move(results_);
    }
    if (seed) {
      if (stats_) ++stats_->seeds_tried;
      if (assign(start, seed->first, seed->second)) solve(std::move(start));
    } else {
      branch_on_free_face(start, FaceId(0));
    }
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  bool done() const { return results_.size() >= limit_; }

  bool assign(PartialMap& s, FaceId f, const FaceImage& img) {
    const Face& face = src_.face(f);
    const Face& g = dst_.face(img.face);
    if (s.face_used[img.face.index()] || g.kind != face.kind || g.size() != face.size()) {
      return false;
    }
    const int n = face.size();
    for (int p = 0; p < n; ++p) {
      if (g.corners[image_corner(img, p, n)] != face.corners[p]) return false;
    }
    for (int p = 0; p < n; ++p) {
      const EdgeId e = face.boundary[p];
      const EdgeId target = image_boundary_edge(dst_, img, p, n);
      if (!set_edge(s, e, target) || !set_edge(s, src_.reverse(e), dst_.reverse(target))) {
        return false;
      }
      if (!set_vertex(s, src_.source(e), dst_.source(target))) return false;
    }
    s.map.faces[f.index()] = img;
    s.face_used[img.face.index()] = 1;
    ++s.assigned_faces;
    s.queue.push_back(f);
    return true;
  }

  static bool set_edge(PartialMap& s, EdgeId e, EdgeId target) {
    EdgeId& slot = s.map.edges[e.index()];
    if (slot.valid()) return slot == target;
    if (s.edge_used[target.index()]) return false;
    slot = target;
    s.edge_used[target.index()] = 1;
    return true;
  }

  static bool set_vertex(PartialMap& s, VertexId v, VertexId target) {
    VertexId& slot = s.map.vertices[v.index()];
    if (slot.valid()) return slot == target;
    if (s.vertex_used[target.index()]) return false;
    slot = target;
    s.vertex_used[target.index()] = 1;
    return true;
  }

  // Candidate images of face side (f, p) given the image of its edge.
  std::vector<FaceImage> candidates(const PartialMap& s, FaceId f, int p) const {
    const Face& face = src_.face(f);
    const int n = face.size();
    const EdgeId image = s.map.edges[face.boundary[p].index()];
    std::vector<FaceImage> out;
    for (const FaceSide& side : dst_.sides_of(image)) {
      if (s.face_used[side.face.index()]) continue;
      const Face& g = dst_.face(side.face);
      if (g.kind != face.kind || g.size() != n) continue;
      const EdgeId there = g.boundary[side.position];
      FaceImage img;
      img.face = side.face;
      if (there == image) {
        img.shift = mod(side.position - p, n);
      } else {
        img.reflected = true;
        img.shift = mod(side.position + p + 1, n);
      }
      bool ok = true;
      for (int q = 0; q < n && ok; ++q) {
        ok = g.corners[image_corner(img, q, n)] == face.corners[q];
      }
      if (ok) out.push_back(img);
    }
    return out;
  }

  void branch_on_free_face(const PartialMap& s, FaceId f) {
    const Face& face = src_.face(f);
    for (FaceId g : dst_.faces()) {
      if (s.face_used[g.index()] || dst_.face(g).kind != face.kind) continue;
      for (bool reflected : {false, true}) {
        for (int shift = 0; shift < face.size(); ++shift) {
          if (done()) return;
          if (stats_) ++stats_->seeds_tried;
          PartialMap next = s;
          if (assign(next, f, FaceImage{g, shift, reflected})) solve(std::move(next));
        }
      }
    }
  }

  void solve(PartialMap s) {
    while (!done()) {
      if (s.queue.empty()) {
        if (s.assigned_faces == src_.face_count()) {
          if (is_isomorphism(src_, dst_, s.map)) results_.push_back(s.map);
          return;
        }
        for (FaceId f : src_.faces()) {
          if (!s.map.faces[f.index()].face.valid()) {
            branch_on_free_face(s, f);
            return;
          }
        }
      }
      const FaceId f = s.queue.front();
      s.queue.pop_front();
      const Face& face = src_.face(f);
      for (int p = 0; p < face.size(); ++p) {
        for (const FaceSide& side : src_.sides_of(face.boundary[p])) {
          if (s.map.faces[side.face.index()].face.valid()) continue;
          auto options = candidates(s, side.face, side.position);
          if (options.empty()) return;
          if (options.size() == 1) {
            if (!assign(s, side.face, options.front())) return;
            continue;
          }
          if (stats_) ++stats_->branch_points;
          s.queue.push_front(f);  // revisit the remaining sides in each branch
          for (const auto& img : options) {
            if (done()) return;
            PartialMap next = s;
            if (assign(next, side.face, img)) solve(std::move(next));
          }
          return;
        }
      }
    }
  }

  const Complex2& src_;
  const Complex2& dst_;
  const std::size_t limit_;
  IsoSearchStats* stats_;
  std::vector<CellMap> results_;
};

}  // namespace

std::vector<CellMap> find_isomorphisms(const Complex2& src, const Complex2& dst,
                                       std::optional<std::pair<FaceId, FaceImage>> seed,
                                       std::size_t limit, IsoSearchStats* stats) {
  if (limit == 0) return {};
  return Propagator(src, dst, limit, stats).run(seed);
}

std::optional<CellMap> find_isomorphism(const Complex2& src, const Complex2& dst,
                                        std::optional<std::pair<FaceId, FaceImage>> seed,
                                        IsoSearchStats* stats) {
  auto found = find_isomorphisms(src, dst, seed, 1, stats);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<CellMap> automorphisms(const Complex2& c, IsoSearchStats* stats) {
  return find_isomorphisms(c, c, std::nullopt, static_cast<std::size_t>(-1), stats);
}

}  // namespace hamsurf
