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
#include <limits>

#include "hamsurf/cell_map.hpp"
#include "hamsurf/chart.hpp"
#include "hamsurf/quotient.hpp"

using namespace hamsurf;

namespace {

constexpr std::size_t kAll = std::numeric_limits<std::size_t>::max();

const ChartData& charts() {
  static const ChartData data = load_charts(HAMSURF_DEFAULT_CHARTS);
  return data;
}

// Same complex with faces listed backwards and vertex names permuted, so
// every cell gets a different id.
Complex2 shuffled_V() {
  ChartData data = charts();
  std::reverse(data.faces.begin(), data.faces.end());
  std::reverse(data.edges.begin(), data.edges.end());
  for (ChartEdge& e : data.edges) {
    for (std::string* end : {&e.from, &e.to}) {
      if (*end == "v0") *end = "w2";
      else if (*end == "v2") *end = "w0";
      else *end = "w1";
    }
  }
  return build_complex(data);
}

}  // namespace

TEST_CASE("corner images") {
  CHECK(image_corner(FaceImage{FaceId(0), 1, false}, 3, 4) == 0);
  CHECK(image_corner(FaceImage{FaceId(0), 2, false}, 1, 4) == 3);
  CHECK(image_corner(FaceImage{FaceId(0), 0, true}, 1, 4) == 3);
  CHECK(image_corner(FaceImage{FaceId(0), 2, true}, 1, 3) == 1);
  CHECK(image_corner(FaceImage{FaceId(0), 0, true}, 0, 3) == 0);
}

TEST_CASE("identity and composition") {
  const Complex2 v = build_V(charts());
  const CellMap id = identity_map(v);
  CHECK(is_isomorphism(v, v, id));
  CHECK(is_identity(id));
  for (const CellMap& g : automorphisms(v)) {
    CHECK(compose(g, id, v) == g);
    CHECK(compose(id, g, v) == g);
    CHECK(is_isomorphism(v, v, g));
  }
}

TEST_CASE("automorphisms are closed under composition") {
  const Complex2 v = build_V(charts());
  const auto group = automorphisms(v);
  for (const CellMap& g : group) {
    for (const CellMap& h : group) {
      CHECK(std::binary_search(group.begin(), group.end(), compose(g, h, v)));
    }
  }
}

TEST_CASE("complete_from_edges rebuilds each automorphism") {
  const Complex2 v = build_V(charts());
  for (const CellMap& g : automorphisms(v)) {
    std::vector<EdgeId> forward;
    for (std::size_t k = 0; k < v.unoriented_edge_count(); ++k) forward.push_back(g.edges[2 * k]);
    auto rebuilt = complete_from_edges(v, v, forward);
    REQUIRE(rebuilt.has_value());
    CHECK(*rebuilt == g);
  }
  std::vector<EdgeId> collapse(v.unoriented_edge_count(), EdgeId(0));
  CHECK_FALSE(complete_from_edges(v, v, collapse).has_value());
}

TEST_CASE("isomorphisms to a renumbered copy") {
  const Complex2 v = build_V(charts());
  const Complex2 w = shuffled_V();
  IsoSearchStats stats;
  const auto isos = find_isomorphisms(v, w, std::nullopt, kAll, &stats);
  CHECK(isos.size() == 8);
  CHECK(stats.seeds_tried > 0);
  for (const CellMap& m : isos) {
    CHECK(is_isomorphism(v, w, m));
    const FaceId a = *v.find_face("a");
    CHECK(w.face(m.faces[a.index()].face).kind == FaceKind::kTriangle);
  }
  CHECK(find_isomorphisms(v, w, std::nullopt, 3).size() == 3);
  CHECK(find_isomorphisms(v, w, std::nullopt, 0).empty());
}

TEST_CASE("seeded isomorphism search") {
  const Complex2 v = build_V(charts());
  const FaceId a = *v.find_face("a");
  const FaceId x = *v.find_face("x");
  auto fixed = find_isomorphism(v, v, std::make_pair(a, FaceImage{a, 0, false}));
  REQUIRE(fixed.has_value());
  CHECK(fixed->faces[a.index()].face == a);
  // A triangle never goes to a lozenge.
  CHECK_FALSE(find_isomorphism(v, v, std::make_pair(a, FaceImage{x, 0, false})).has_value());
}

TEST_CASE("no isomorphism between complexes of different shape") {
  const Complex2 v = build_V(charts());
  const Complex2 s = build_S(charts());
  CHECK_FALSE(find_isomorphism(v, s).has_value());
  CHECK(find_isomorphism(s, s).has_value());
}
