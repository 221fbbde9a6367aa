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

#include "hamsurf/hamsurface.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <random>
#include <set>

namespace hamsurf {

SurfaceAmbient SurfaceAmbient::whole(const Complex2& c) {
  SurfaceAmbient a;
  a.complex = &c;
  a.vertex_constrained.assign(c.vertex_count(), 1);
  a.edge_constrained.assign(c.unoriented_edge_count(), 1);
  a.face_in_domain.assign(c.face_count(), 1);
  return a;
}

SurfaceAmbient SurfaceAmbient::interior(const Ball& ball) {
  const Complex2& c = ball.complex;
  SurfaceAmbient a;
  a.complex = &c;
  a.vertex_constrained = ball.vertex_interior;
  a.edge_constrained = ball.edge_interior;
  a.face_in_domain.assign(c.face_count(), 0);
  for (FaceId f : c.faces()) {
    for (EdgeId e : c.face(f).boundary) {
      if (a.vertex_constrained[c.source(e).index()]) a.face_in_domain[f.index()] = 1;
    }
  }
  return a;
}

namespace {

std::vector<char> member_mask(const Complex2& c, const FaceSet& members) {
  std::vector<char> in(c.face_count(), 0);
  for (FaceId f : members) in.at(f.index()) = 1;
  return in;
}

SurfaceVerdict reject(std::string reason, std::optional<VertexId> v = std::nullopt,
                      std::optional<std::size_t> e = std::nullopt) {
  return SurfaceVerdict{false, std::move(reason), v, e};
}

// Link edges traced by the members, as a graph on all germs at v.
LabeledGraph trace_graph(const LinkGraph& link, const std::vector<char>& in,
                         std::vector<int>* link_edges = nullptr) {
  LabeledGraph g(link.graph.node_count());
  for (int i = 0; i < link.graph.edge_count(); ++i) {
    if (!in[link.corners[i].face.index()]) continue;
    const auto& e = link.graph.edge(i);
    g.add_edge(e.u, e.v, e.label);
    if (link_edges) link_edges->push_back(i);
  }
  return g;
}

bool is_single_spanning_cycle(const LabeledGraph& g) {
  if (g.node_count() < 3) return false;
  for (int n = 0; n < g.node_count(); ++n) {
    if (g.degree(n) != 2) return false;
  }
  return g.connected();
}

}  // namespace

SurfaceVerdict is_enveloping(const SurfaceAmbient& ambient, const FaceSet& members) {
  const Complex2& c = *ambient.complex;
  const auto in = member_mask(c, members);
  for (FaceId f : members) {
    if (!ambient.face_in_domain[f.index()]) {
      return reject(fmt::format("face {} is outside the constrained region", c.face(f).name));
    }
  }
  for (std::size_t k = 0; k < c.unoriented_edge_count(); ++k) {
    if (!ambient.edge_constrained[k]) continue;
    int covered = 0;
    for (const FaceSide& s : c.sides_of(EdgeId(2 * k))) covered += in[s.face.index()];
    if (covered != 2) {
      return reject(fmt::format("edge {} is covered {} times", c.edge(EdgeId(2 * k)).name, covered),
                    std::nullopt, k);
    }
  }
  if (members.empty()) return reject("no faces");
  std::vector<char> seen(c.face_count(), 0);
  std::vector<FaceId> stack{members.front()};
  seen[members.front().index()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const FaceId f = stack.back();
    stack.pop_back();
    for (EdgeId e : c.face(f).boundary) {
      for (const FaceSide& s : c.sides_of(e)) {
        if (in[s.face.index()] && !seen[s.face.index()]) {
          seen[s.face.index()] = 1;
          ++reached;
          stack.push_back(s.face);
        }
      }
    }
  }
  if (reached != members.size()) return reject("members are not connected");
  return SurfaceVerdict{true, {}, std::nullopt, std::nullopt};
}

SurfaceVerdict is_hamiltonian(const SurfaceAmbient& ambient, const FaceSet& members) {
  SurfaceVerdict env = is_enveloping(ambient, members);
  if (!env.ok) return env;
  const Complex2& c = *ambient.complex;
  const auto in = member_mask(c, members);
  for (VertexId v : c.vertices()) {
    if (!ambient.vertex_constrained[v.index()]) continue;
    const LinkGraph link = vertex_link(c, v);
    if (!is_single_spanning_cycle(trace_graph(link, in))) {
      return reject(fmt::format("trace at {} is not one Hamiltonian cycle", c.vertex_name(v)), v);
    }
  }
  return SurfaceVerdict{true, {}, std::nullopt, std::nullopt};
}

bool lt_extends_to_ltL(const std::vector<AngleLabel>& cyclic) {
  const int n = static_cast<int>(cyclic.size());
  for (int i = 0; i < n; ++i) {
    for (int dir : {1, -1}) {
      const AngleLabel a = cyclic[i];
      const AngleLabel b = cyclic[((i + dir) % n + n) % n];
      const AngleLabel next = cyclic[((i + 2 * dir) % n + n) % n];
      if (a == AngleLabel::kSmall && b == AngleLabel::kTriangle && next != AngleLabel::kLarge) {
        return false;
      }
    }
  }
  return true;
}

std::vector<VertexTrace> vertex_traces(const SurfaceAmbient& ambient, const FaceSet& members) {
  const Complex2& c = *ambient.complex;
  const auto in = member_mask(c, members);
  std::vector<VertexTrace> out;
  for (VertexId v : c.vertices()) {
    if (!ambient.vertex_constrained[v.index()]) continue;
    VertexTrace t;
    t.vertex = v;
    const LinkGraph link = vertex_link(c, v);
    std::vector<int> used;
    trace_graph(link, in, &used);
    if (auto cycle = cycle_from_edges(link.graph, used)) {
      t.type = classify_cycle(*cycle);
      for (int e : cycle->edges) t.labels.push_back(*link.graph.edge(e).label);
      t.subword_rule = lt_extends_to_ltL(t.labels);
      t.cycle = std::move(cycle);
    }
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

struct ShurikenSide {
  std::vector<FaceId> lozenges;       // member lozenges on this edge
  std::vector<VertexId> large_ends;   // their large-corner endpoints
};

std::vector<ShurikenSide> shuriken_sides(const Complex2& c, FaceId triangle,
                                         const std::vector<char>* in) {
  const Face& t = c.face(triangle);
  if (t.kind != FaceKind::kTriangle) {
    throw std::invalid_argument(fmt::format("{} is not a triangle", t.name));
  }
  std::vector<ShurikenSide> sides;
  for (EdgeId e : t.boundary) {
    ShurikenSide side;
    for (const FaceSide& s : c.sides_of(e)) {
      const Face& g = c.face(s.face);
      if (g.kind != FaceKind::kLozenge) continue;
      if (in && !(*in)[s.face.index()]) continue;
      const int n = g.size();
      const int p = s.position;
      const int q = (p + 1) % n;
      side.lozenges.push_back(s.face);
      side.large_ends.push_back(g.corners[p] == AngleLabel::kLarge ? c.corner_vertex(s.face, p)
                                                                   : c.corner_vertex(s.face, q));
    }
    sides.push_back(std::move(side));
  }
  return sides;
}

}  // namespace

bool shuriken_check(const Complex2& c, FaceId triangle, const FaceSet& members) {
  const auto in = member_mask(c, members);
  const auto sides = shuriken_sides(c, triangle, &in);
  std::set<VertexId> ends;
  for (const auto& s : sides) {
    if (s.lozenges.size() != 1) return false;
    ends.insert(s.large_ends.front());
  }
  return ends.size() == 3;
}

std::optional<FaceId> shuriken_completion(const Complex2& c, FaceId triangle,
                                          const FaceSet& members) {
  const auto in = member_mask(c, members);
  const auto chosen = shuriken_sides(c, triangle, &in);
  const auto all = shuriken_sides(c, triangle, nullptr);
  std::set<VertexId> used;
  int open = -1;
  for (int i = 0; i < 3; ++i) {
    if (chosen[i].lozenges.empty()) {
      if (open >= 0) return std::nullopt;
      open = i;
    } else if (chosen[i].lozenges.size() == 1) {
      used.insert(chosen[i].large_ends.front());
    } else {
      return std::nullopt;
    }
  }
  if (open < 0 || used.size() != 2) return std::nullopt;
  std::optional<FaceId> found;
  for (std::size_t j = 0; j < all[open].lozenges.size(); ++j) {
    if (used.count(all[open].large_ends[j])) continue;
    if (found) return std::nullopt;
    found = all[open].lozenges[j];
  }
  return found;
}

std::string_view to_string(PropagationStatus status) {
  switch (status) {
    case PropagationStatus::kSurface:
      return "surface";
    case PropagationStatus::kContradiction:
      return "contradiction";
    case PropagationStatus::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

// Type3 cycles of the link at v as sets of positions in corners_at(v).
std::vector<std::vector<char>> type3_candidates(const LinkGraph& link) {
  std::vector<std::vector<char>> out;
  for (const HamCycle& cycle : enumerate_hamiltonian_cycles(link.graph)) {
    if (classify_cycle(cycle) != CycleType::kType3) continue;
    std::vector<char> uses(link.graph.edge_count(), 0);
    for (int e : cycle.edges) uses[e] = 1;
    out.push_back(std::move(uses));
  }
  return out;
}

class Propagator {
 public:
  Propagator(const SurfaceAmbient& ambient, const PropagationOptions& options)
      : a_(ambient), c_(*ambient.complex), state_(c_.face_count(), kUnknown) {
    if (options.shuffle_seed) rng_.emplace(*options.shuffle_seed);
    for (FaceId f : c_.faces()) {
      if (!a_.face_in_domain[f.index()]) state_[f.index()] = kOut;
    }
    links_.resize(c_.vertex_count());
    alive_.resize(c_.vertex_count());
    for (VertexId v : c_.vertices()) {
      if (!a_.vertex_constrained[v.index()]) continue;
      links_[v.index()] = vertex_link(c_, v);
      alive_[v.index()] = type3_candidates(*links_[v.index()]);
    }
  }

  PropagationResult run(FaceId seed, LocalChoice choice) {
    PropagationResult r;
    const Face& face = c_.face(seed);
    if (face.kind != FaceKind::kLozenge) {
      throw std::invalid_argument(fmt::format("seed {} is not a lozenge", face.name));
    }
    std::optional<VertexId> anchor;
    for (int i = 0; i < face.size(); ++i) {
      const VertexId v = c_.corner_vertex(seed, i);
      if (a_.vertex_constrained[v.index()] && (!anchor || v < *anchor)) anchor = v;
    }
    if (!anchor) throw std::invalid_argument("seed has no constrained corner");
    r.anchor = *anchor;
    const LinkGraph& link = *links_[anchor->index()];
    int seed_corner = -1;
    for (int i = 0; i < static_cast<int>(link.corners.size()); ++i) {
      if (link.corners[i].face == seed) seed_corner = i;
    }
    auto& candidates = alive_[anchor->index()];
    std::vector<std::vector<char>> kept;
    for (auto& cand : candidates) {
      if ((cand[seed_corner] != 0) == (choice == LocalChoice::kA)) kept.push_back(cand);
    }
    candidates = std::move(kept);
    r.trail.push_back(fmt::format("anchor {} choice {} keeps {} type3 cycle(s)",
                                  c_.vertex_name(*anchor), choice == LocalChoice::kA ? "A" : "B",
                                  candidates.size()));
    push(vertex_item(*anchor));

    while (!work_.empty()) {
      const int item = pop();
      const bool ok = item < static_cast<int>(c_.vertex_count())
                          ? apply_vertex(VertexId(item), r)
                          : apply_edge(static_cast<std::size_t>(item) - c_.vertex_count(), r);
      if (!ok) {
        r.status = PropagationStatus::kContradiction;
        r.members = members();
        return r;
      }
    }
    r.members = members();
    for (FaceId f : c_.faces()) r.undetermined += state_[f.index()] == kUnknown;
    r.status = r.undetermined == 0 ? PropagationStatus::kSurface : PropagationStatus::kUndetermined;
    return r;
  }

 private:
  static constexpr signed char kUnknown = -1;
  static constexpr signed char kOut = 0;
  static constexpr signed char kIn = 1;

  int vertex_item(VertexId v) const { return static_cast<int>(v.index()); }
  int edge_item(std::size_t k) const { return static_cast<int>(c_.vertex_count() + k); }

  void push(int item) {
    if (queued_.insert(item).second) work_.push_back(item);
  }

  int pop() {
    std::size_t pick = 0;
    if (rng_) {
      pick = std::uniform_int_distribution<std::size_t>(0, work_.size() - 1)(*rng_);
    } else {
      pick = static_cast<std::size_t>(
          std::min_element(work_.begin(), work_.end()) - work_.begin());
    }
    const int item = work_[pick];
    work_[pick] = work_.back();
    work_.pop_back();
    queued_.erase(item);
    return item;
  }

  void set(FaceId f, signed char value, PropagationResult& r, const std::string& why) {
    state_[f.index()] = value;
    ++r.forced;
    r.trail.push_back(fmt::format("{} {} ({})", value == kIn ? "in" : "out", c_.face(f).name, why));
    for (EdgeId e : c_.face(f).boundary) {
      const VertexId v = c_.source(e);
      if (a_.vertex_constrained[v.index()]) push(vertex_item(v));
      if (a_.edge_constrained[e.index() / 2]) push(edge_item(e.index() / 2));
    }
  }

  bool apply_vertex(VertexId v, PropagationResult& r) {
    const LinkGraph& link = *links_[v.index()];
    auto& candidates = alive_[v.index()];
    std::vector<std::vector<char>> kept;
    for (auto& cand : candidates) {
      bool ok = true;
      for (std::size_t i = 0; i < link.corners.size() && ok; ++i) {
        const signed char s = state_[link.corners[i].face.index()];
        if (s == kIn && !cand[i]) ok = false;
        if (s == kOut && cand[i]) ok = false;
      }
      if (ok) kept.push_back(std::move(cand));
    }
    candidates = std::move(kept);
    if (candidates.empty()) {
      r.blocking_vertex = v;
      r.trail.push_back(fmt::format("no type3 cycle left at {}", c_.vertex_name(v)));
      return false;
    }
    for (std::size_t i = 0; i < link.corners.size(); ++i) {
      const FaceId f = link.corners[i].face;
      if (state_[f.index()] != kUnknown) continue;
      bool all = true;
      bool none = true;
      for (const auto& cand : candidates) {
        all = all && cand[i];
        none = none && !cand[i];
      }
      if (all) set(f, kIn, r, fmt::format("link at {}", c_.vertex_name(v)));
      if (none) set(f, kOut, r, fmt::format("link at {}", c_.vertex_name(v)));
    }
    return true;
  }

  bool apply_edge(std::size_t k, PropagationResult& r) {
    int in = 0;
    std::vector<FaceId> unknown;
    for (const FaceSide& s : c_.sides_of(EdgeId(2 * k))) {
      const signed char st = state_[s.face.index()];
      if (st == kIn) ++in;
      if (st == kUnknown) unknown.push_back(s.face);
    }
    const std::string name = c_.edge(EdgeId(2 * k)).name;
    if (in > 2 || in + static_cast<int>(unknown.size()) < 2) {
      r.blocking_edge = k;
      r.trail.push_back(fmt::format("edge {} cannot be covered twice", name));
      return false;
    }
    if (in == 2) {
      for (FaceId f : unknown) set(f, kOut, r, fmt::format("edge {} full", name));
    } else if (in + static_cast<int>(unknown.size()) == 2) {
      for (FaceId f : unknown) set(f, kIn, r, fmt::format("edge {} needs it", name));
    }
    return true;
  }

  FaceSet members() const {
    FaceSet out;
    for (FaceId f : c_.faces()) {
      if (state_[f.index()] == kIn) out.push_back(f);
    }
    return out;
  }

  const SurfaceAmbient& a_;
  const Complex2& c_;
  std::vector<signed char> state_;
  std::vector<std::optional<LinkGraph>> links_;
  std::vector<std::vector<std::vector<char>>> alive_;
  std::vector<int> work_;
  std::set<int> queued_;
  std::optional<std::mt19937_64> rng_;
};

}  // namespace

PropagationResult propagate_surface(const SurfaceAmbient& ambient, FaceId seed,
                                    LocalChoice choice, const PropagationOptions& options) {
  return Propagator(ambient, options).run(seed, choice);
}

BudgetExceeded::BudgetExceeded(std::uint64_t nodes)
    : std::runtime_error(fmt::format("search budget exceeded after {} nodes", nodes)),
      nodes_(nodes) {}

namespace {

// Independent of Propagator: bitmask feasibility per vertex, counters per
// edge, plain depth-first search over faces.
class SurfaceSearch {
 public:
  SurfaceSearch(const SurfaceAmbient& ambient, TraceMode mode, std::uint64_t budget)
      : a_(ambient), c_(*ambient.complex), budget_(budget) {
    const std::size_t nv = c_.vertex_count();
    allowed_.resize(nv);
    in_.assign(nv, 0);
    out_.assign(nv, 0);
    corner_slots_.resize(c_.face_count());
    for (VertexId v : c_.vertices()) {
      if (!a_.vertex_constrained[v.index()]) continue;
      const LinkGraph link = vertex_link(c_, v);
      if (link.graph.edge_count() > 32) {
        throw std::invalid_argument("count_surfaces_exhaustive: link with more than 32 corners");
      }
      for (const HamCycle& cycle : enumerate_hamiltonian_cycles(link.graph)) {
        if (mode == TraceMode::kType3 && classify_cycle(cycle) != CycleType::kType3) continue;
        std::uint32_t mask = 0;
        for (int e : cycle.edges) mask |= 1u << e;
        allowed_[v.index()].push_back(mask);
      }
      for (int i = 0; i < link.graph.edge_count(); ++i) {
        corner_slots_[link.corners[i].face.index()].emplace_back(v, i);
      }
    }
    in_count_.assign(c_.unoriented_edge_count(), 0);
    open_count_.assign(c_.unoriented_edge_count(), 0);
    for (std::size_t k = 0; k < c_.unoriented_edge_count(); ++k) {
      for (const FaceSide& s : c_.sides_of(EdgeId(2 * k))) {
        open_count_[k] += a_.face_in_domain[s.face.index()];
      }
    }
    for (FaceId f : c_.faces()) {
      if (a_.face_in_domain[f.index()]) order_.push_back(f);
    }
    auto key = [&](FaceId f) {
      VertexId lowest(static_cast<int32_t>(c_.vertex_count()));
      for (EdgeId e : c_.face(f).boundary) lowest = std::min(lowest, c_.source(e));
      return std::make_pair(lowest, f);
    };
    std::sort(order_.begin(), order_.end(), [&](FaceId x, FaceId y) { return key(x) < key(y); });
    chosen_.assign(c_.face_count(), 0);
  }

  ExhaustiveResult run() {
    for (std::size_t k = 0; k < c_.unoriented_edge_count(); ++k) {
      if (a_.edge_constrained[k] && open_count_[k] < 2) return {{}, 0};
    }
    search(0);
    std::sort(found_.begin(), found_.end());
    return ExhaustiveResult{std::move(found_), nodes_};
  }

 private:
  bool feasible(VertexId v) const {
    const std::uint32_t in = in_[v.index()];
    const std::uint32_t out = out_[v.index()];
    for (std::uint32_t cycle : allowed_[v.index()]) {
      if ((in & ~cycle) == 0 && (out & cycle) == 0) return true;
    }
    return false;
  }

  bool edge_ok(std::size_t k) const {
    if (!a_.edge_constrained[k]) return true;
    return in_count_[k] <= 2 && in_count_[k] + open_count_[k] >= 2;
  }

  void mark(FaceId f, bool member, int delta) {
    for (const auto& [v, i] : corner_slots_[f.index()]) {
      auto& mask = member ? in_[v.index()] : out_[v.index()];
      if (delta > 0) {
        mask |= 1u << i;
      } else {
        mask &= ~(1u << i);
      }
    }
    for (EdgeId e : c_.face(f).boundary) {
      const std::size_t k = e.index() / 2;
      open_count_[k] -= delta;
      if (member) in_count_[k] += delta;
    }
  }

  bool consistent(FaceId f) const {
    for (const auto& slot : corner_slots_[f.index()]) {
      if (!feasible(slot.first)) return false;
    }
    for (EdgeId e : c_.face(f).boundary) {
      if (!edge_ok(e.index() / 2)) return false;
    }
    return true;
  }

  void search(std::size_t depth) {
    if (depth == order_.size()) {
      FaceSet members;
      for (FaceId f : order_) {
        if (chosen_[f.index()]) members.push_back(f);
      }
      std::sort(members.begin(), members.end());
      found_.push_back(std::move(members));
      return;
    }
    const FaceId f = order_[depth];
    for (bool member : {true, false}) {
      if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
      chosen_[f.index()] = member;
      mark(f, member, +1);
      if (consistent(f)) search(depth + 1);
      mark(f, member, -1);
      chosen_[f.index()] = 0;
    }
  }

  const SurfaceAmbient& a_;
  const Complex2& c_;
  const std::uint64_t budget_;
  std::vector<std::vector<std::uint32_t>> allowed_;
  std::vector<std::uint32_t> in_;
  std::vector<std::uint32_t> out_;
  std::vector<std::vector<std::pair<VertexId, int>>> corner_slots_;
  std::vector<int> in_count_;
  std::vector<int> open_count_;
  std::vector<FaceId> order_;
  std::vector<char> chosen_;
  std::vector<FaceSet> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExhaustiveResult count_surfaces_exhaustive(const SurfaceAmbient& ambient, TraceMode mode,
                                           std::uint64_t budget) {
  return SurfaceSearch(ambient, mode, budget).run();
}

ExhaustiveResult count_surfaces_exhaustive(const Ball& ball, TraceMode mode,
                                           std::uint64_t budget, int max_radius) {
  if (ball.radius > max_radius) {
    throw std::invalid_argument(fmt::format(
        "exhaustive search is capped at radius {}, got {}", max_radius, ball.radius));
  }
  return count_surfaces_exhaustive(SurfaceAmbient::interior(ball), mode, budget);
}

std::string_view to_string(Periodicity p) {
  switch (p) {
    case Periodicity::kS:
      return "S";
    case Periodicity::kSprime:
      return "S'";
    case Periodicity::kNeither:
      return "neither";
  }
  return "neither";
}

PeriodicityResult periodicity_check(const Complex2& quotient, const CellMap& covering,
                                    const FaceSet& members,
                                    const std::vector<std::string>& s_faces,
                                    const std::vector<std::string>& sprime_faces) {
  std::set<std::string> image;
  for (FaceId f : members) image.insert(quotient.face(covering.faces.at(f.index()).face).name);
  PeriodicityResult r;
  r.image.assign(image.begin(), image.end());
  const std::set<std::string> s(s_faces.begin(), s_faces.end());
  const std::set<std::string> sp(sprime_faces.begin(), sprime_faces.end());
  if (image == s) r.verdict = Periodicity::kS;
  else if (image == sp) r.verdict = Periodicity::kSprime;
  return r;
}

}  // namespace hamsurf
