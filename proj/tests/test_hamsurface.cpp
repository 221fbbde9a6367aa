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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "hamsurf/cover.hpp"
#include "hamsurf/hamgraph.hpp"
#include "hamsurf/hamsurface.hpp"
#include "hamsurf/quotient.hpp"

using namespace hamsurf;

namespace {

const ChartData& charts() {
  static const ChartData data = load_charts(HAMSURF_DEFAULT_CHARTS);
  return data;
}

const Complex2& quotient() {
  static const Complex2 v = build_V(charts());
  return v;
}

FaceSet named(const std::string& surface) {
  FaceSet f = faces_by_name(quotient(), surface_face_names(charts(), surface));
  std::sort(f.begin(), f.end());
  return f;
}

bool all_edges_constrained(const SurfaceAmbient& a, FaceId f) {
  for (EdgeId e : a.complex->face(f).boundary) {
    if (!a.edge_constrained[e.index() / 2]) return false;
  }
  return true;
}

FaceSet without(const FaceSet& s, FaceId f) {
  FaceSet out;
  for (FaceId g : s) {
    if (g != f) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("S and S' are Hamiltonian surfaces of V with Type3 traces") {
  const SurfaceAmbient whole = SurfaceAmbient::whole(quotient());
  for (const char* name : {"S", "S'"}) {
    const FaceSet s = named(name);
    CHECK(is_enveloping(whole, s).ok);
    CHECK(is_hamiltonian(whole, s).ok);
    for (const VertexTrace& t : vertex_traces(whole, s)) {
      REQUIRE(t.cycle.has_value());
      CHECK(t.type == CycleType::kType3);
      CHECK(t.subword_rule);
      CHECK(t.labels.size() == 8);
    }
  }
}

TEST_CASE("on V itself the two surfaces are exactly S and S'") {
  const SurfaceAmbient whole = SurfaceAmbient::whole(quotient());
  const std::set<FaceSet> expected{named("S"), named("S'")};
  for (TraceMode mode : {TraceMode::kType3, TraceMode::kAnyHamiltonian}) {
    const ExhaustiveResult r = count_surfaces_exhaustive(whole, mode);
    CHECK(std::set<FaceSet>(r.surfaces.begin(), r.surfaces.end()) == expected);
    CHECK(r.surfaces.size() == 2);
  }
  const FaceId x = *quotient().find_face("x");
  const PropagationResult a = propagate_surface(whole, x, LocalChoice::kA, {});
  const PropagationResult b = propagate_surface(whole, x, LocalChoice::kB, {});
  CHECK(a.status == PropagationStatus::kSurface);
  CHECK(b.status == PropagationStatus::kSurface);
  CHECK(std::set<FaceSet>{a.members, b.members} == expected);
}

TEST_CASE("non-surfaces are rejected with a reason") {
  const SurfaceAmbient whole = SurfaceAmbient::whole(quotient());
  const FaceSet s = named("S");
  const SurfaceVerdict missing = is_enveloping(whole, without(s, *quotient().find_face("x")));
  CHECK_FALSE(missing.ok);
  CHECK(missing.edge.has_value());
  FaceSet extra = s;
  extra.push_back(*quotient().find_face("x'"));
  std::sort(extra.begin(), extra.end());
  CHECK_FALSE(is_enveloping(whole, extra).ok);
  CHECK_FALSE(is_enveloping(whole, {}).ok);
  FaceSet mixed = without(s, *quotient().find_face("z"));
  mixed.push_back(*quotient().find_face("z'"));
  std::sort(mixed.begin(), mixed.end());
  const SurfaceVerdict h = is_hamiltonian(whole, mixed);
  CHECK(is_enveloping(whole, mixed).ok);
  CHECK_FALSE(h.ok);
  CHECK(h.vertex.has_value());
}

TEST_CASE("l-t subwords") {
  using A = AngleLabel;
  CHECK(lt_extends_to_ltL({A::kSmall, A::kTriangle, A::kLarge, A::kTriangle, A::kSmall,
                           A::kTriangle, A::kLarge, A::kTriangle}));
  CHECK_FALSE(lt_extends_to_ltL({A::kSmall, A::kTriangle, A::kSmall, A::kTriangle, A::kSmall,
                                 A::kTriangle, A::kSmall, A::kTriangle}));
  CHECK_FALSE(lt_extends_to_ltL({A::kTriangle, A::kSmall, A::kTriangle, A::kLarge, A::kTriangle,
                                 A::kTriangle, A::kLarge, A::kTriangle}));
  CHECK_FALSE(lt_extends_to_ltL({A::kLarge, A::kSmall, A::kTriangle, A::kTriangle}));
  CHECK(lt_extends_to_ltL({A::kTriangle, A::kTriangle, A::kTriangle}));
  CHECK(lt_extends_to_ltL({A::kSmall, A::kLarge, A::kSmall, A::kLarge}));
  CHECK(lt_extends_to_ltL({A::kLarge, A::kTriangle, A::kSmall, A::kLarge}));
}

TEST_CASE("the subword rule separates Type3 cycles of L from Type1") {
  const LabeledGraph L = moebius_ladder_L();
  for (const HamCycle& c : enumerate_hamiltonian_cycles(L)) {
    std::vector<AngleLabel> labels;
    for (int e : c.edges) labels.push_back(*L.edge(e).label);
    const CycleType type = classify_cycle(c);
    if (type == CycleType::kType3) CHECK(lt_extends_to_ltL(labels));
    if (type == CycleType::kType1) CHECK_FALSE(lt_extends_to_ltL(labels));
  }
}

TEST_CASE("propagation on radius-2 balls") {
  for (VertexId base : quotient().vertices()) {
    const Ball b = build_ball(quotient(), base, 2);
    const SurfaceAmbient a = SurfaceAmbient::interior(b);
    std::set<FaceSet> found;
    int seeds = 0;
    for (FaceId f : b.complex.faces()) {
      if (!a.face_in_domain[f.index()] || b.complex.face(f).kind != FaceKind::kLozenge) continue;
      ++seeds;
      const PropagationResult pa = propagate_surface(a, f, LocalChoice::kA, {});
      const PropagationResult pb = propagate_surface(a, f, LocalChoice::kB, {});
      CHECK(pa.status == PropagationStatus::kSurface);
      CHECK(pb.status == PropagationStatus::kSurface);
      CHECK(pa.undetermined == 0);
      CHECK(pa.members != pb.members);
      CHECK(std::binary_search(pa.members.begin(), pa.members.end(), f));
      CHECK_FALSE(std::binary_search(pb.members.begin(), pb.members.end(), f));
      found.insert(pa.members);
      found.insert(pb.members);
    }
    CHECK(seeds == 48);
    CHECK(found.size() == 2);
    const ExhaustiveResult ex = count_surfaces_exhaustive(b);
    CHECK(std::set<FaceSet>(ex.surfaces.begin(), ex.surfaces.end()) == found);
    CHECK(ex.nodes < 100'000);
  }
}

TEST_CASE("propagation is confluent over random worklist orders") {
  const Ball b = build_ball(quotient(), VertexId(0), 2);
  const SurfaceAmbient a = SurfaceAmbient::interior(b);
  std::vector<FaceId> lozenges;
  for (FaceId f : b.complex.faces()) {
    if (a.face_in_domain[f.index()] && b.complex.face(f).kind == FaceKind::kLozenge) {
      lozenges.push_back(f);
    }
  }
  for (FaceId seed : {lozenges.front(), lozenges[lozenges.size() / 2], lozenges.back()}) {
    for (LocalChoice choice : {LocalChoice::kA, LocalChoice::kB}) {
      const FaceSet reference = propagate_surface(a, seed, choice, {}).members;
      for (std::uint64_t s = 1; s <= 40; ++s) {
        CHECK(propagate_surface(a, seed, choice, PropagationOptions{s}).members == reference);
      }
    }
  }
}

TEST_CASE("both ball surfaces contain every interior triangle and share nothing else") {
  const Ball b = build_ball(quotient(), VertexId(2), 2);
  const SurfaceAmbient a = SurfaceAmbient::interior(b);
  const ExhaustiveResult ex = count_surfaces_exhaustive(b);
  REQUIRE(ex.surfaces.size() == 2);
  FaceSet triangles;
  for (FaceId f : b.complex.faces()) {
    if (a.face_in_domain[f.index()] && b.complex.face(f).kind == FaceKind::kTriangle) {
      triangles.push_back(f);
    }
  }
  FaceSet common;
  std::set_intersection(ex.surfaces[0].begin(), ex.surfaces[0].end(), ex.surfaces[1].begin(),
                        ex.surfaces[1].end(), std::back_inserter(common));
  CHECK(common == triangles);
  CHECK(triangles.size() == 28);
}

TEST_CASE("ball surfaces project onto S and S'") {
  const auto s = surface_face_names(charts(), "S");
  const auto sp = surface_face_names(charts(), "S'");
  for (VertexId base : quotient().vertices()) {
    const Ball b = build_ball(quotient(), base, 2);
    std::multiset<Periodicity> verdicts;
    for (const FaceSet& m : count_surfaces_exhaustive(b).surfaces) {
      verdicts.insert(periodicity_check(quotient(), b.covering, m, s, sp).verdict);
    }
    CHECK(verdicts == std::multiset<Periodicity>{Periodicity::kS, Periodicity::kSprime});
  }
  const Ball b = build_ball(quotient(), VertexId(0), 1);
  const FaceSet all = [&] {
    FaceSet f = b.complex.faces();
    return f;
  }();
  CHECK(periodicity_check(quotient(), b.covering, all, s, sp).verdict == Periodicity::kNeither);
}

TEST_CASE("shuriken around interior triangles") {
  const Ball b = build_ball(quotient(), VertexId(0), 2);
  const SurfaceAmbient a = SurfaceAmbient::interior(b);
  const ExhaustiveResult ex = count_surfaces_exhaustive(b);
  int checked = 0;
  for (const FaceSet& s : ex.surfaces) {
    for (FaceId f : b.complex.faces()) {
      if (b.complex.face(f).kind != FaceKind::kTriangle || !a.face_in_domain[f.index()] ||
          !all_edges_constrained(a, f)) {
        continue;
      }
      ++checked;
      CHECK(shuriken_check(b.complex, f, s));
      for (EdgeId e : b.complex.face(f).boundary) {
        for (const FaceSide& side : b.complex.sides_of(e)) {
          if (b.complex.face(side.face).kind != FaceKind::kLozenge ||
              !std::binary_search(s.begin(), s.end(), side.face)) {
            continue;
          }
          const auto completed = shuriken_completion(b.complex, f, without(s, side.face));
          REQUIRE(completed.has_value());
          CHECK(*completed == side.face);
        }
      }
    }
  }
  CHECK(checked == 8);
  CHECK_THROWS_AS(shuriken_check(b.complex, *b.complex.find_face("x.4"), ex.surfaces[0]),
                  std::invalid_argument);
}

TEST_CASE("propagation reports contradictions") {
  const Ball b = build_ball(quotient(), VertexId(0), 2);
  SurfaceAmbient a = SurfaceAmbient::interior(b);
  // Every surface needs all interior triangles; forbid one.
  for (FaceId f : b.complex.faces()) {
    if (b.complex.face(f).kind == FaceKind::kTriangle) {
      a.face_in_domain[f.index()] = 0;
      break;
    }
  }
  FaceId seed;
  for (FaceId f : b.complex.faces()) {
    if (b.complex.face(f).kind == FaceKind::kLozenge && a.face_in_domain[f.index()]) {
      seed = f;
      break;
    }
  }
  for (LocalChoice choice : {LocalChoice::kA, LocalChoice::kB}) {
    const PropagationResult r = propagate_surface(a, seed, choice, {});
    CHECK(r.status == PropagationStatus::kContradiction);
    CHECK((r.blocking_vertex.has_value() || r.blocking_edge.has_value()));
    CHECK_FALSE(r.trail.empty());
  }
  CHECK(count_surfaces_exhaustive(a, TraceMode::kType3).surfaces.empty());
}

TEST_CASE("bad seeds and limits") {
  const Ball b = build_ball(quotient(), VertexId(0), 2);
  const SurfaceAmbient a = SurfaceAmbient::interior(b);
  CHECK_THROWS_AS(propagate_surface(a, *b.complex.find_face("a.0"), LocalChoice::kA, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_surfaces_exhaustive(a, TraceMode::kType3, 10), BudgetExceeded);
  CHECK_THROWS_AS(count_surfaces_exhaustive(build_ball(quotient(), VertexId(0), 3)),
                  std::invalid_argument);
  CHECK(to_string(PropagationStatus::kUndetermined) == "undetermined");
}
