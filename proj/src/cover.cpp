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

#include "hamsurf/cover.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "hamsurf/hamgraph.hpp"

namespace hamsurf {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

FoldConflict::FoldConflict(std::vector<std::string> trail)
    : std::runtime_error("fold conflict: " + join(trail)), trail_(std::move(trail)) {}

namespace {

struct RawEdge {
  int src = 0;
  int dst = 0;
  EdgeId image;  // image of src -> dst
};

struct RawFace {
  FaceId image;
  std::vector<std::pair<int, bool>> boundary;  // (edge record, runs src -> dst)
};

// Cells with union-find identifications. Edge records carry a parity bit:
// a record with parity 1 runs against its root.
class Folder {
 public:
  explicit Folder(const Complex2& quotient) : q_(quotient) {}

  int add_vertex(VertexId image) {
    vertex_image_.push_back(image);
    vertex_parent_.push_back(static_cast<int>(vertex_parent_.size()));
    return vertex_parent_.back();
  }

  int add_edge(int src, int dst, EdgeId image) {
    edges_.push_back(RawEdge{src, dst, image});
    edge_parent_.push_back(static_cast<int>(edge_parent_.size()));
    edge_parity_.push_back(0);
    return edge_parent_.back();
  }

  int add_face(FaceId image, std::vector<std::pair<int, bool>> boundary) {
    faces_.push_back(RawFace{image, std::move(boundary)});
    face_parent_.push_back(static_cast<int>(face_parent_.size()));
    return face_parent_.back();
  }

  // New face copy of `image` whose corner `position` sits at vertex u.
  void attach(FaceId image, int position, int u) {
    const Face& f = q_.face(image);
    const int n = f.size();
    std::vector<int> corners(n);
    for (int i = 0; i < n; ++i) {
      corners[i] = i == position ? u : add_vertex(q_.corner_vertex(image, i));
    }
    std::vector<std::pair<int, bool>> boundary;
    for (int i = 0; i < n; ++i) {
      boundary.emplace_back(add_edge(corners[i], corners[(i + 1) % n], f.boundary[i]), true);
    }
    add_face(image, std::move(boundary));
  }

  int find_vertex(int v) {
    while (vertex_parent_[v] != v) v = vertex_parent_[v] = vertex_parent_[vertex_parent_[v]];
    return v;
  }

  std::pair<int, bool> find_edge(int k) {
    bool parity = false;
    int x = k;
    while (edge_parent_[x] != x) {
      parity ^= edge_parity_[x] != 0;
      x = edge_parent_[x];
    }
    const int root = x;
    bool acc = parity;
    x = k;
    while (edge_parent_[x] != x) {
      const int next = edge_parent_[x];
      const bool own = edge_parity_[x] != 0;
      edge_parent_[x] = root;
      edge_parity_[x] = acc;
      acc ^= own;
      x = next;
    }
    return {root, parity};
  }

  int find_face(int f) {
    while (face_parent_[f] != f) f = face_parent_[f] = face_parent_[face_parent_[f]];
    return f;
  }

  EdgeId oriented_image(int k, bool reversed) const {
    return reversed ? q_.reverse(edges_[k].image) : edges_[k].image;
  }
  int oriented_source(int k, bool reversed) const {
    return reversed ? edges_[k].dst : edges_[k].src;
  }
  int oriented_target(int k, bool reversed) const {
    return reversed ? edges_[k].src : edges_[k].dst;
  }

  void fold_to_fixpoint() {
    for (;;) {
      const std::size_t before = folds_;
      std::map<std::pair<int, int>, std::pair<int, bool>> germs;
      for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
        if (find_edge(k).first != k) continue;
        for (bool reversed : {false, true}) {
          const int s = find_vertex(oriented_source(k, reversed));
          const auto key = std::make_pair(s, oriented_image(k, reversed).value());
          auto [it, inserted] = germs.emplace(key, std::make_pair(k, reversed));
          if (!inserted) unite_edges(k, reversed, it->second.first, it->second.second);
        }
      }
      std::map<std::tuple<int, int, int, bool>, int> sides;
      for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
        if (find_face(f) != f) continue;
        const RawFace& face = faces_[f];
        for (int i = 0; i < static_cast<int>(face.boundary.size()); ++i) {
          const auto [root, parity] = find_edge(face.boundary[i].first);
          const bool reversed = !face.boundary[i].second ^ parity;
          const auto key = std::make_tuple(face.image.value(), i, root, reversed);
          auto [it, inserted] = sides.emplace(key, f);
          if (!inserted && find_face(it->second) != find_face(f)) unite_faces(f, it->second);
        }
      }
      if (folds_ == before) return;
    }
  }

  Ball build(int base, int radius) {
    std::vector<int> vertex_id(vertex_parent_.size(), -1);
    std::vector<int> edge_id(edges_.size(), -1);
    std::vector<int> face_id(faces_.size(), -1);
    Complex2Builder builder;
    Ball ball;
    int next = 0;
    for (int v = 0; v < static_cast<int>(vertex_parent_.size()); ++v) {
      if (find_vertex(v) != v) continue;
      vertex_id[v] = next;
      builder.add_vertex(fmt::format("{}.{}", q_.vertex_name(vertex_image_[v]), next));
      ball.covering.vertices.push_back(vertex_image_[v]);
      ++next;
    }
    next = 0;
    for (int k = 0; k < static_cast<int>(edges_.size()); ++k) {
      if (find_edge(k).first != k) continue;
      edge_id[k] = next;
      const RawEdge& e = edges_[k];
      const OrientedEdge& img = q_.edge(e.image);
      builder.add_edge(fmt::format("{}{}.{}", img.name, img.forward ? "" : "~", next),
                       VertexId(vertex_id[find_vertex(e.src)]),
                       VertexId(vertex_id[find_vertex(e.dst)]));
      ball.covering.edges.push_back(e.image);
      ball.covering.edges.push_back(q_.reverse(e.image));
      ++next;
    }
    next = 0;
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
      if (find_face(f) != f) continue;
      face_id[f] = next;
      const RawFace& face = faces_[f];
      std::vector<EdgeId> boundary;
      for (const auto& [k, forward] : face.boundary) {
        const auto [root, parity] = find_edge(k);
        const bool reversed = !forward ^ parity;
        boundary.emplace_back(2 * edge_id[root] + (reversed ? 1 : 0));
      }
      const Face& img = q_.face(face.image);
      builder.add_face(fmt::format("{}.{}", img.name, next), img.kind, std::move(boundary),
                       img.corners);
      ball.covering.faces.push_back(FaceImage{face.image, 0, false});
      ++next;
    }
    ball.complex = std::move(builder).build();
    ball.radius = radius;
    ball.base = VertexId(vertex_id[find_vertex(base)]);
    ball.folds = folds_;
    return ball;
  }

  std::size_t folds() const { return folds_; }

 private:
  [[noreturn]] void conflict(std::vector<std::string> trail) { throw FoldConflict(std::move(trail)); }

  void unite_vertices(int a, int b) {
    a = find_vertex(a);
    b = find_vertex(b);
    if (a == b) return;
    if (vertex_image_[a] != vertex_image_[b]) {
      conflict({fmt::format("vertex {} (image {}) vs vertex {} (image {})", a,
                            q_.vertex_name(vertex_image_[a]), b,
                            q_.vertex_name(vertex_image_[b]))});
    }
    if (b < a) std::swap(a, b);
    vertex_parent_[b] = a;
    ++folds_;
  }

  void unite_edges(int a, bool ra, int b, bool rb) {
    const auto [A, pa] = find_edge(a);
    const auto [B, pb] = find_edge(b);
    const bool oa = ra ^ pa;
    const bool ob = rb ^ pb;
    const std::string what = fmt::format("edge {}{} vs edge {}{}", A, oa ? "~" : "", B, ob ? "~" : "");
    if (A == B) {
      if (oa != ob) conflict({what, "edge identified with its reverse"});
      return;
    }
    if (oriented_image(A, oa) != oriented_image(B, ob)) {
      conflict({what, fmt::format("images {} and {}", q_.edge(oriented_image(A, oa)).name,
                                  q_.edge(oriented_image(B, ob)).name)});
    }
    try {
      unite_vertices(oriented_source(A, oa), oriented_source(B, ob));
      unite_vertices(oriented_target(A, oa), oriented_target(B, ob));
    } catch (const FoldConflict& e) {
      auto trail = e.trail();
      trail.insert(trail.begin(), what);
      conflict(std::move(trail));
    }
    const int root = std::min(A, B);
    const int child = std::max(A, B);
    edge_parent_[child] = root;
    edge_parity_[child] = oa != ob;
    ++folds_;
  }

  void unite_faces(int f, int g) {
    f = find_face(f);
    g = find_face(g);
    if (faces_[f].image != faces_[g].image) {
      conflict({fmt::format("face {} vs face {}: different images", f, g)});
    }
    const auto& bf = faces_[f].boundary;
    const auto& bg = faces_[g].boundary;
    for (std::size_t i = 0; i < bf.size(); ++i) {
      unite_edges(bf[i].first, !bf[i].second, bg[i].first, !bg[i].second);
    }
    if (g < f) std::swap(f, g);
    face_parent_[g] = f;
    ++folds_;
  }

  const Complex2& q_;
  std::vector<VertexId> vertex_image_;
  std::vector<int> vertex_parent_;
  std::vector<RawEdge> edges_;
  std::vector<int> edge_parent_;
  std::vector<char> edge_parity_;
  std::vector<RawFace> faces_;
  std::vector<int> face_parent_;
  std::size_t folds_ = 0;
};

void check_aligned(const Ball& ball) {
  for (const auto& img : ball.covering.faces) {
    if (img.shift != 0 || img.reflected) {
      throw std::invalid_argument("ball faces must be aligned with their images");
    }
  }
}

// Loads the cells of `ball` selected by the masks, in id order.
Folder load(const Complex2& q, const Ball& ball, const std::vector<char>& keep_vertex,
            const std::vector<char>& keep_edge, const std::vector<char>& keep_face) {
  check_aligned(ball);
  const Complex2& c = ball.complex;
  Folder folder(q);
  std::vector<int> vertex_id(c.vertex_count(), -1);
  std::vector<int> edge_id(c.unoriented_edge_count(), -1);
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (keep_vertex[v]) vertex_id[v] = folder.add_vertex(ball.covering.vertices[v]);
  }
  for (std::size_t k = 0; k < c.unoriented_edge_count(); ++k) {
    if (!keep_edge[k]) continue;
    const EdgeId e(2 * k);
    edge_id[k] = folder.add_edge(vertex_id[c.source(e).index()], vertex_id[c.target(e).index()],
                                 ball.covering.edges[2 * k]);
  }
  for (FaceId f : c.faces()) {
    if (!keep_face[f.index()]) continue;
    std::vector<std::pair<int, bool>> boundary;
    for (EdgeId e : c.face(f).boundary) {
      boundary.emplace_back(edge_id[e.index() / 2], e.index() % 2 == 0);
    }
    folder.add_face(ball.covering.faces[f.index()].face, std::move(boundary));
  }
  return folder;
}

// Corners of the quotient at image(v) that are missing from the star of v.
std::vector<FaceCorner> missing_corners(const Complex2& q, const Ball& ball, VertexId v) {
  std::set<FaceCorner> present;
  for (const FaceCorner& k : ball.complex.corners_at(v)) {
    present.insert(FaceCorner{ball.covering.faces[k.face.index()].face, k.position});
  }
  std::vector<FaceCorner> missing;
  for (const FaceCorner& k : q.corners_at(ball.covering.vertices[v.index()])) {
    if (!present.count(k)) missing.push_back(k);
  }
  return missing;
}

bool star_complete(const Complex2& q, const Ball& ball, VertexId v) {
  std::multiset<FaceCorner> present;
  for (const FaceCorner& k : ball.complex.corners_at(v)) {
    present.insert(FaceCorner{ball.covering.faces[k.face.index()].face, k.position});
  }
  const auto expected = q.corners_at(ball.covering.vertices[v.index()]);
  std::multiset<FaceCorner> wanted(expected.begin(), expected.end());
  return present == wanted;
}

std::vector<int> vertex_depths(const Complex2& c, VertexId base) {
  std::vector<int> depth(c.vertex_count(), -1);
  if (c.vertex_count() == 0) return depth;
  std::queue<VertexId> queue;
  depth[base.index()] = 0;
  queue.push(base);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (EdgeId e : c.germs_at(v)) {
      const VertexId w = c.target(e);
      if (depth[w.index()] < 0) {
        depth[w.index()] = depth[v.index()] + 1;
        queue.push(w);
      }
    }
  }
  return depth;
}

struct Flags {
  std::vector<int> vertex_depth;
  std::vector<int> edge_depth;
  std::vector<int> face_depth;
  std::vector<char> vertex_interior;
  std::vector<char> edge_interior;
  std::vector<char> face_interior;
};

Flags compute_flags(const Complex2& q, const Ball& ball) {
  const Complex2& c = ball.complex;
  Flags f;
  f.vertex_depth = vertex_depths(c, ball.base);
  for (std::size_t k = 0; k < c.unoriented_edge_count(); ++k) {
    const EdgeId e(2 * k);
    f.edge_depth.push_back(
        std::min(f.vertex_depth[c.source(e).index()], f.vertex_depth[c.target(e).index()]));
    f.edge_interior.push_back(c.sides_of(e).size() ==
                              q.sides_of(ball.covering.edges[2 * k]).size());
  }
  for (VertexId v : c.vertices()) f.vertex_interior.push_back(star_complete(q, ball, v));
  for (FaceId face : c.faces()) {
    int depth = std::numeric_limits<int>::max();
    bool interior = true;
    for (EdgeId e : c.face(face).boundary) {
      depth = std::min(depth, f.vertex_depth[c.source(e).index()]);
      interior = interior && f.edge_interior[e.index() / 2];
    }
    f.face_depth.push_back(depth);
    f.face_interior.push_back(interior);
  }
  return f;
}

void apply_flags(Ball& ball, Flags flags) {
  ball.vertex_depth = std::move(flags.vertex_depth);
  ball.edge_depth = std::move(flags.edge_depth);
  ball.face_depth = std::move(flags.face_depth);
  ball.vertex_interior = std::move(flags.vertex_interior);
  ball.edge_interior = std::move(flags.edge_interior);
  ball.face_interior = std::move(flags.face_interior);
}

}  // namespace

Ball base_ball(const Complex2& quotient, VertexId base) {
  if (!base.valid() || base.index() >= quotient.vertex_count()) {
    throw std::out_of_range("base_ball: unknown vertex");
  }
  Folder folder(quotient);
  folder.add_vertex(base);
  Ball ball = folder.build(0, 0);
  ball.folds = 0;
  apply_flags(ball, compute_flags(quotient, ball));
  return ball;
}

Ball expand_ball(const Complex2& quotient, const Ball& ball) {
  const Complex2& c = ball.complex;
  Folder folder = load(quotient, ball, std::vector<char>(c.vertex_count(), 1),
                       std::vector<char>(c.unoriented_edge_count(), 1),
                       std::vector<char>(c.face_count(), 1));
  std::size_t attached = 0;
  for (VertexId v : c.vertices()) {
    if (ball.vertex_depth[v.index()] != ball.radius) continue;
    for (const FaceCorner& k : missing_corners(quotient, ball, v)) {
      folder.attach(k.face, k.position, static_cast<int>(v.index()));
      ++attached;
    }
  }
  folder.fold_to_fixpoint();
  Ball next = folder.build(static_cast<int>(ball.base.index()), ball.radius + 1);
  next.attached = attached;
  apply_flags(next, compute_flags(quotient, next));
  for (VertexId v : next.complex.vertices()) {
    if (next.vertex_depth[v.index()] <= ball.radius && !next.vertex_interior[v.index()]) {
      throw FoldConflict({fmt::format("vertex {} at depth {} has an incomplete star after folding",
                                      v.value(), next.vertex_depth[v.index()])});
    }
  }
  return next;
}

Ball build_ball(const Complex2& quotient, VertexId base, int radius) {
  Ball ball = base_ball(quotient, base);
  for (int r = 0; r < radius; ++r) ball = expand_ball(quotient, ball);
  return ball;
}

Ball restrict_to_radius(const Complex2& quotient, const Ball& ball, int radius) {
  const Complex2& c = ball.complex;
  std::vector<char> keep_vertex(c.vertex_count(), 0);
  std::vector<char> keep_edge(c.unoriented_edge_count(), 0);
  std::vector<char> keep_face(c.face_count(), 0);
  keep_vertex[ball.base.index()] = 1;
  for (FaceId f : c.faces()) {
    const Face& face = c.face(f);
    bool near = false;
    for (EdgeId e : face.boundary) near = near || ball.vertex_depth[c.source(e).index()] <= radius - 1;
    if (!near) continue;
    keep_face[f.index()] = 1;
    for (EdgeId e : face.boundary) {
      keep_edge[e.index() / 2] = 1;
      keep_vertex[c.source(e).index()] = 1;
    }
  }
  Folder folder = load(quotient, ball, keep_vertex, keep_edge, keep_face);
  int base = 0;
  for (std::size_t v = 0; v < ball.base.index(); ++v) base += keep_vertex[v];
  Ball out = folder.build(base, radius);
  out.folds = 0;
  apply_flags(out, compute_flags(quotient, out));
  return out;
}

bool same_ball(const Ball& a, const Ball& b) {
  const Complex2& x = a.complex;
  const Complex2& y = b.complex;
  if (a.radius != b.radius || a.base != b.base || x.vertex_count() != y.vertex_count() ||
      x.edge_count() != y.edge_count() || x.face_count() != y.face_count()) {
    return false;
  }
  if (a.covering != b.covering || a.vertex_depth != b.vertex_depth) return false;
  for (std::size_t i = 0; i < x.edge_count(); ++i) {
    const EdgeId e(i);
    if (x.source(e) != y.source(e) || x.target(e) != y.target(e)) return false;
  }
  for (FaceId f : x.faces()) {
    if (x.face(f).boundary != y.face(f).boundary) return false;
  }
  return true;
}

Ball remove_face(const Ball& ball, FaceId face) {
  const Complex2& c = ball.complex;
  Complex2Builder builder;
  for (VertexId v : c.vertices()) builder.add_vertex(c.vertex_name(v));
  for (std::size_t k = 0; k < c.unoriented_edge_count(); ++k) {
    const EdgeId e(2 * k);
    builder.add_edge(c.edge(e).name, c.source(e), c.target(e));
  }
  Ball out = ball;
  for (FaceId f : c.faces()) {
    if (f == face) continue;
    const Face& src = c.face(f);
    builder.add_face(src.name, src.kind, src.boundary, src.corners);
  }
  out.complex = std::move(builder).build();
  out.covering.faces.erase(out.covering.faces.begin() + face.index());
  out.face_depth.erase(out.face_depth.begin() + face.index());
  out.face_interior.erase(out.face_interior.begin() + face.index());
  return out;
}

CoverReport verify_cover(const Complex2& quotient, const Ball& ball) {
  CoverReport r;
  const Complex2& c = ball.complex;
  auto fail = [&](std::string message) { r.violations.push_back(std::move(message)); };
  for (const auto& v : validate_complex(c)) fail(fmt::format("{}: {}", v.cell, v.message));
  if (!is_cellular(c, quotient, ball.covering)) fail("covering map is not cellular");
  if (!r.violations.empty()) return r;

  const Flags flags = compute_flags(quotient, ball);
  if (flags.vertex_depth != ball.vertex_depth) fail("stored vertex depths are stale");
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (flags.vertex_depth[v] < 0) fail(fmt::format("vertex {} unreachable from base", v));
  }
  for (std::size_t k = 0; k < c.unoriented_edge_count(); ++k) {
    const auto got = c.sides_of(EdgeId(2 * k)).size();
    const auto want = quotient.sides_of(ball.covering.edges[2 * k]).size();
    if (got > want) fail(fmt::format("edge {} has {} faces, image has {}", k, got, want));
    if (ball.edge_interior.at(k) && got != want) {
      fail(fmt::format("interior edge {} has {} faces, expected {}", k, got, want));
    }
  }

  std::map<VertexId, LinkGraph> quotient_links;
  for (VertexId v : quotient.vertices()) quotient_links.emplace(v, vertex_link(quotient, v));
  for (VertexId v : c.vertices()) {
    VertexCheck check;
    check.vertex = v;
    check.depth = flags.vertex_depth[v.index()];
    check.interior = ball.vertex_interior.at(v.index()) != 0;
    for (const FaceCorner& k : c.corners_at(v)) {
      ++(c.face(k.face).kind == FaceKind::kTriangle ? check.triangles : check.lozenges);
    }
    std::set<EdgeId> germ_images;
    for (EdgeId e : c.germs_at(v)) {
      if (!germ_images.insert(ball.covering.edges[e.index()]).second) {
        fail(fmt::format("vertex {}: two germs with the same image", v.value()));
      }
    }
    if (check.interior) {
      ++r.interior_vertices;
      if (!flags.vertex_interior[v.index()]) {
        fail(fmt::format("interior vertex {} has an incomplete star", v.value()));
      }
      const LinkGraph link = vertex_link(c, v);
      const LinkGraph& image = quotient_links.at(ball.covering.vertices[v.index()]);
      check.link_matches = labeled_isomorphic(link.graph, image.graph).has_value();
      if (!check.link_matches) {
        fail(fmt::format("interior vertex {}: link differs from the quotient link", v.value()));
      }
      if (link.graph.fully_labeled() && link.graph.edge_count() > 0) {
        check.girth = angular_girth(link.graph);
      }
      if (check.girth.value_or(0) < 6) {
        fail(fmt::format("interior vertex {}: angular girth {} < 6", v.value(),
                         check.girth.value_or(0)));
      }
      if (germ_images.size() != quotient.germs_at(ball.covering.vertices[v.index()]).size()) {
        fail(fmt::format("interior vertex {}: germs do not cover the image germs", v.value()));
      }
    }
    r.vertices.push_back(check);
  }
  for (VertexId v : c.vertices()) {
    if (ball.vertex_depth.at(v.index()) < ball.radius && !ball.vertex_interior.at(v.index())) {
      fail(fmt::format("vertex {} at depth {} is not interior", v.value(),
                       ball.vertex_depth[v.index()]));
    }
  }
  r.pass = r.violations.empty();
  return r;
}

std::vector<CensusRow> ball_census(const Ball& ball) {
  const Complex2& c = ball.complex;
  int max_depth = 0;
  for (int d : ball.vertex_depth) max_depth = std::max(max_depth, d);
  std::vector<CensusRow> rows(max_depth + 1);
  for (int d = 0; d <= max_depth; ++d) rows[d].depth = d;
  for (int d : ball.vertex_depth) ++rows[d].vertices;
  for (int d : ball.edge_depth) ++rows[d].edges;
  for (FaceId f : c.faces()) {
    auto& row = rows[ball.face_depth[f.index()]];
    ++(c.face(f).kind == FaceKind::kTriangle ? row.triangles : row.lozenges);
  }
  return rows;
}

std::string dump_ball(const Complex2& quotient, const Ball& ball) {
  const Complex2& c = ball.complex;
  std::string out = fmt::format("ball radius {} base {} vertices {} edges {} faces {}\n",
                                ball.radius, ball.base.value(), c.vertex_count(),
                                c.unoriented_edge_count(), c.face_count());
  auto by_depth = [](const std::vector<int>& depth) {
    std::vector<std::size_t> order(depth.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
    return order;
  };
  auto flag = [](char interior) { return interior ? " interior" : ""; };
  for (std::size_t v : by_depth(ball.vertex_depth)) {
    out += fmt::format("vertex {} depth {} image {}{}\n", v, ball.vertex_depth[v],
                       quotient.vertex_name(ball.covering.vertices[v]),
                       flag(ball.vertex_interior[v]));
  }
  for (std::size_t k : by_depth(ball.edge_depth)) {
    const EdgeId e(2 * k);
    const OrientedEdge& img = quotient.edge(ball.covering.edges[2 * k]);
    out += fmt::format("edge {} depth {} {} -> {} image {}{}{}\n", k, ball.edge_depth[k],
                       c.source(e).value(), c.target(e).value(), img.name,
                       img.forward ? "+" : "-", flag(ball.edge_interior[k]));
  }
  for (std::size_t f : by_depth(ball.face_depth)) {
    std::string word;
    for (EdgeId e : c.face(FaceId(f)).boundary) {
      word += fmt::format(" {}{}", e.index() / 2, e.index() % 2 == 0 ? "+" : "-");
    }
    out += fmt::format("face {} depth {} image {} :{}{}\n", f, ball.face_depth[f],
                       quotient.face(ball.covering.faces[f].face).name, word,
                       flag(ball.face_interior[f]));
  }
  return out;
}

std::optional<CellMap> ball_isomorphism(const Ball& a, const Ball& b) {
  const auto corners_a = a.complex.corners_at(a.base);
  if (corners_a.empty()) {
    if (a.complex.vertex_count() == 1 && b.complex.vertex_count() == 1 &&
        b.complex.face_count() == 0 && a.complex.face_count() == 0) {
      CellMap m;
      m.vertices.push_back(VertexId(0));
      return m;
    }
    return std::nullopt;
  }
  const FaceId seed = corners_a.front().face;
  const int n = a.complex.face(seed).size();
  std::set<FaceId> tried;
  for (const FaceCorner& k : b.complex.corners_at(b.base)) {
    if (!tried.insert(k.face).second) continue;
    for (bool reflected : {false, true}) {
      for (int shift = 0; shift < n; ++shift) {
        auto found = find_isomorphism(a.complex, b.complex,
                                      std::make_pair(seed, FaceImage{k.face, shift, reflected}));
        if (found && found->vertices[a.base.index()] == b.base) return found;
      }
    }
  }
  return std::nullopt;
}

}  // namespace hamsurf
