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

#include <fmt/format.h>

#include <algorithm>

#include "hamsurf/chart.hpp"
#include "hamsurf/complex.hpp"
#include "hamsurf/hamgraph.hpp"
#include "hamsurf/quotient.hpp"
#include "oracles.hpp"

using namespace hamsurf;

namespace {

const char* kTetrahedron = R"(
edge e01 : p0 -> p1
edge e02 : p0 -> p2
edge e03 : p0 -> p3
edge e12 : p1 -> p2
edge e13 : p1 -> p3
edge e23 : p2 -> p3
face f012 triangle : e01+ e12+ e02-
face f031 triangle : e03+ e13- e01-
face f023 triangle : e02+ e23+ e03-
face f132 triangle : e13+ e23- e12-
)";

Complex2 from_text(const char* text) { return build_complex(parse_charts(text)); }

Complex2 one_lozenge(const char* word) {
  return from_text(fmt::format("edge a : p -> p\nedge b : p -> p\nface q lozenge : {}\n", word)
                       .c_str());
}

}  // namespace

TEST_CASE("tetrahedron boundary is a sphere") {
  const Complex2 c = from_text(kTetrahedron);
  CHECK(validate_complex(c).empty());
  const SurfaceReport r = surface_report(c);
  CHECK(r.is_closed_surface);
  CHECK(r.euler_characteristic == 2);
  CHECK(r.orientable);
  CHECK(r.genus_or_crosscaps == 0);
  CHECK(oracle::brute_orientable(c));
  CHECK(oracle::naive_euler(c) == 2);
  for (VertexId v : c.vertices()) {
    const LinkGraph link = vertex_link(c, v);
    CHECK(link.graph.node_count() == 3);
    CHECK(link.graph.edge_count() == 3);
    CHECK(angular_girth(link.graph) == 3);
    CHECK(link.corners.size() == 3);
  }
}

TEST_CASE("one-lozenge torus, Klein bottle and projective plane") {
  const Complex2 torus = one_lozenge("a+ b+ a- b-");
  const Complex2 klein = one_lozenge("a+ b+ a- b+");
  CHECK(validate_complex(torus).empty());
  SurfaceReport r = surface_report(torus);
  CHECK(r.is_closed_surface);
  CHECK(r.euler_characteristic == 0);
  CHECK(r.orientable);
  CHECK(r.genus_or_crosscaps == 1);
  r = surface_report(klein);
  CHECK(r.is_closed_surface);
  CHECK_FALSE(r.orientable);
  CHECK(r.genus_or_crosscaps == 2);
  CHECK_FALSE(oracle::brute_orientable(klein));

  const Complex2 rp2 = from_text("edge a : p -> q\nedge b : q -> p\nface q lozenge : a+ b+ a+ b+\n");
  CHECK(validate_complex(rp2).empty());
  r = surface_report(rp2);
  CHECK(r.is_closed_surface);
  CHECK(r.euler_characteristic == 1);
  CHECK_FALSE(r.orientable);
  CHECK(r.genus_or_crosscaps == 1);
}

TEST_CASE("a single triangle is not closed") {
  const Complex2 c = from_text("edge a : p -> q\nedge b : q -> r\nedge c : r -> p\nface t triangle : a+ b+ c+\n");
  CHECK(validate_complex(c).empty());
  const SurfaceReport r = surface_report(c);
  CHECK_FALSE(r.is_closed_surface);
  CHECK_FALSE(r.genus_or_crosscaps.has_value());
  CHECK(r.euler_characteristic == 1);
}

TEST_CASE("validation reports malformed faces") {
  Complex2Builder b;
  const VertexId p = b.add_vertex("p");
  const VertexId q = b.add_vertex("q");
  const EdgeId a = b.add_edge("a", p, q);
  const EdgeId c = b.add_edge("c", q, p);
  b.add_face("open", FaceKind::kTriangle, {a, a, c});
  b.add_face("square", FaceKind::kTriangle, {a, c, a, c});
  b.add_face("labels", FaceKind::kLozenge, {a, c, a, c},
             std::vector<AngleLabel>{AngleLabel::kLarge, AngleLabel::kSmall, AngleLabel::kLarge,
                                     AngleLabel::kSmall});
  const Complex2 cx = std::move(b).build();
  const auto problems = validate_complex(cx);
  auto mentions = [&](const std::string& face, const std::string& needle) {
    return std::any_of(problems.begin(), problems.end(), [&](const Violation& v) {
      return v.cell.find(face) != std::string::npos &&
             v.message.find(needle) != std::string::npos;
    });
  };
  CHECK(mentions("open", "not closed"));
  CHECK(mentions("square", "4 sides"));
  CHECK(mentions("labels", "lozenge corners"));
}

TEST_CASE("oriented edge pairs") {
  const Complex2 c = from_text(kTetrahedron);
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    const EdgeId e(static_cast<int32_t>(i));
    CHECK(c.reverse(c.reverse(e)) == e);
    CHECK(c.reverse(e).index() == (i ^ 1));
    CHECK(c.source(c.reverse(e)) == c.target(e));
  }
  CHECK(c.find_edge("e01").has_value());
  CHECK(c.find_edge("e01")->index() % 2 == 0);
  CHECK_FALSE(c.find_edge("nope").has_value());
}

TEST_CASE("surface reports agree with the orientation oracle on quotient subcomplexes") {
  const ChartData data = load_charts(HAMSURF_DEFAULT_CHARTS);
  const Complex2 v = build_V(data);
  const std::vector<std::vector<std::string>> pieces{
      {"a", "b", "c", "d", "x", "y", "z"},   {"a", "b", "c", "d", "x'", "y'", "z'"},
      {"a", "b", "c", "d", "x", "y", "z'"},  {"a", "b", "c", "d", "x'", "y", "z"},
      {"x", "x'"},                           {"y", "y'"},
      {"z", "z'"},                           {"a", "b", "c", "d", "x", "y'", "z"}};
  for (const auto& names : pieces) {
    const auto faces = faces_by_name(v, names);
    const Subcomplex sub = subcomplex(v, faces);
    const SurfaceReport r = surface_report(sub.complex);
    INFO(names.size(), " faces starting ", names.front(), " ", names.back());
    const bool mixed = names.size() == 7 && names != pieces[0] && names != pieces[1];
    CHECK(r.is_closed_surface == !mixed);
    if (r.is_closed_surface) CHECK(r.orientable == oracle::brute_orientable(sub.complex));
    CHECK(r.euler_characteristic == oracle::naive_euler(sub.complex));
    CHECK(sub.face_origin.size() == names.size());
  }
  CHECK_THROWS_AS(faces_by_name(v, std::vector<std::string>{"nope"}), std::out_of_range);
}

TEST_CASE("vertex links of V match links read directly from the charts") {
  const ChartData data = load_charts(HAMSURF_DEFAULT_CHARTS);
  const Complex2 v = build_V(data);
  std::vector<std::string> all;
  for (const auto& f : data.faces) all.push_back(f.id);
  const LabeledGraph L = moebius_ladder_L();
  for (VertexId x : v.vertices()) {
    const LabeledGraph from_chart = oracle::chart_link(data, v.vertex_name(x), all);
    CHECK(from_chart.node_count() == 8);
    CHECK(oracle::brute_isomorphic(from_chart, vertex_link(v, x).graph));
    CHECK(oracle::brute_isomorphic(from_chart, L));
  }
}

TEST_CASE("edge face degree in V is three") {
  const Complex2 v = build_V(load_charts(HAMSURF_DEFAULT_CHARTS));
  for (std::size_t k = 0; k < v.unoriented_edge_count(); ++k) {
    CHECK(edge_face_degree(v, EdgeId(static_cast<int32_t>(2 * k))) == 3);
  }
  CHECK_FALSE(surface_report(v).is_closed_surface);
}
