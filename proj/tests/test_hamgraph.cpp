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
#include <map>
#include <numeric>
#include <random>

#include "hamsurf/hamgraph.hpp"
#include "oracles.hpp"

using namespace hamsurf;

namespace {

std::set<oracle::EdgeSet> as_edge_sets(const std::vector<HamCycle>& cycles) {
  std::set<oracle::EdgeSet> out;
  for (const HamCycle& c : cycles) {
    oracle::EdgeSet e = c.edges;
    std::sort(e.begin(), e.end());
    out.insert(e);
  }
  return out;
}

LabeledGraph complete(int n) {
  LabeledGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

LabeledGraph rim_of_L() {
  const LabeledGraph L = moebius_ladder_L();
  LabeledGraph rim(8);
  for (const auto& e : L.edges()) {
    if (!e.rung) rim.add_edge(e.u, e.v, e.label);
  }
  return rim;
}

LabeledGraph petersen() {
  LabeledGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

TEST_CASE("small graphs have the expected cycle counts") {
  CHECK(enumerate_hamiltonian_cycles(complete(3)).size() == 1);
  CHECK(enumerate_hamiltonian_cycles(complete(4)).size() == 3);
  CHECK(enumerate_hamiltonian_cycles(complete(5)).size() == 12);
  CHECK(enumerate_hamiltonian_cycles(petersen()).empty());
  LabeledGraph k33(6);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
  }
  CHECK(enumerate_hamiltonian_cycles(k33).size() == 6);
}

TEST_CASE("enumeration rejects tiny and disconnected graphs") {
  CHECK_THROWS_AS(enumerate_hamiltonian_cycles(complete(2)), std::invalid_argument);
  LabeledGraph two_triangles(6);
  for (int base : {0, 3}) {
    for (int i = 0; i < 3; ++i) two_triangles.add_edge(base + i, base + (i + 1) % 3);
  }
  CHECK_THROWS_AS(enumerate_hamiltonian_cycles(two_triangles), std::invalid_argument);
  LabeledGraph g(2);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("the ladder L") {
  const LabeledGraph L = moebius_ladder_L();
  CHECK(L.node_count() == 8);
  CHECK(L.edge_count() == 12);
  for (int n = 0; n < 8; ++n) CHECK(L.degree(n) == 3);
  CHECK(vertex_transitive(L));
  CHECK(L.fully_labeled());
  int rungs = 0;
  for (const auto& e : L.edges()) {
    if (e.rung) {
      ++rungs;
      CHECK(e.label == AngleLabel::kLarge);
      CHECK((e.v - e.u + 8) % 8 == 4);
    }
  }
  CHECK(rungs == 4);
}

TEST_CASE("L has one rung-free cycle and four that omit consecutive rungs") {
  const LabeledGraph L = moebius_ladder_L();
  const auto cycles = enumerate_hamiltonian_cycles(L);
  REQUIRE(cycles.size() == 5);
  std::map<int, int> by_rungs;
  std::map<CycleType, int> by_type;
  for (const HamCycle& c : cycles) {
    ++by_rungs[c.rung_count];
    ++by_type[classify_cycle(c)];
    const RungReport r = rung_report(L, c);
    if (c.rung_count == 0) {
      CHECK(classify_cycle(c) == CycleType::kType1);
      CHECK(c.labels.angular_length() == 8);
      CHECK(c.labels == LabelCounts{4, 4, 0, 0});
    } else {
      CHECK(r.omitted_consecutive);
      CHECK(r.used_at_distance_three);
      CHECK(c.labels.angular_length() == 10);
    }
  }
  CHECK(by_rungs == std::map<int, int>{{0, 1}, {2, 4}});
  CHECK(by_type == std::map<CycleType, int>{
                       {CycleType::kType1, 1}, {CycleType::kType2, 2}, {CycleType::kType3, 2}});
}

TEST_CASE("type label multisets") {
  const LabeledGraph L = moebius_ladder_L();
  for (const HamCycle& c : enumerate_hamiltonian_cycles(L)) {
    switch (classify_cycle(c)) {
      case CycleType::kType2:
        CHECK(c.labels == LabelCounts{2, 4, 2, 0});
        break;
      case CycleType::kType3:
        CHECK(c.labels == LabelCounts{4, 2, 2, 0});
        break;
      default:
        break;
    }
  }
}

TEST_CASE("the two Type3 cycles of L use complementary rung pairs") {
  const LabeledGraph L = moebius_ladder_L();
  std::vector<std::vector<int>> used;
  for (const HamCycle& c : enumerate_hamiltonian_cycles(L)) {
    if (classify_cycle(c) == CycleType::kType3) used.push_back(rung_report(L, c).used);
  }
  REQUIRE(used.size() == 2);
  std::vector<int> all = used[0];
  all.insert(all.end(), used[1].begin(), used[1].end());
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.size() == 4);
}

TEST_CASE("cycles are stored once, starting at node 0, in canonical direction") {
  const LabeledGraph L = moebius_ladder_L();
  for (const HamCycle& c : enumerate_hamiltonian_cycles(L)) {
    CHECK(c.nodes.front() == 0);
    CHECK(c.nodes[1] < c.nodes.back());
    auto back = cycle_from_edges(L, c.edges);
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK_FALSE(cycle_from_edges(L, {0, 1, 2}).has_value());
}

TEST_CASE("enumeration matches the permutation oracle on random graphs") {
  std::mt19937_64 rng(20241016);
  int checked = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const bool parallel = trial % 4 == 3;
      const LabeledGraph g = oracle::random_graph(rng, n, n + trial % 9, parallel);
      const auto fast = as_edge_sets(enumerate_hamiltonian_cycles(g));
      CHECK(fast == oracle::naive_hamiltonian_cycles(g));
      ++checked;
    }
  }
  CHECK(checked == 240);
  CHECK(as_edge_sets(enumerate_hamiltonian_cycles(moebius_ladder_L())) ==
        oracle::naive_hamiltonian_cycles(moebius_ladder_L()));
  CHECK(as_edge_sets(enumerate_hamiltonian_cycles(complete(7))) ==
        oracle::naive_hamiltonian_cycles(complete(7)));
}

TEST_CASE("cycle counts are invariant under relabeling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 7;
    const LabeledGraph g = oracle::random_graph(rng, n, 2 * n, false);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(enumerate_hamiltonian_cycles(g).size() ==
          enumerate_hamiltonian_cycles(oracle::relabel(g, perm)).size());
  }
}

TEST_CASE("every edge of a cubic graph lies on an even number of Hamiltonian cycles") {
  std::mt19937_64 rng(99);
  int hamiltonian = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + 2 * (trial % 6);
    const LabeledGraph g = oracle::random_cubic(rng, n);
    const auto cycles = enumerate_hamiltonian_cycles(g);
    if (!cycles.empty()) ++hamiltonian;
    for (int count : cycles_per_edge(g, cycles)) CHECK(count % 2 == 0);
  }
  CHECK(hamiltonian > 20);
  const LabeledGraph L = moebius_ladder_L();
  for (int count : cycles_per_edge(L, enumerate_hamiltonian_cycles(L))) CHECK(count % 2 == 0);
}

TEST_CASE("the Coxeter graph has no Hamiltonian cycle") {
  const LabeledGraph cox = load_graph(HAMSURF_DEFAULT_COXETER);
  CHECK(cox.node_count() == 28);
  CHECK(cox.edge_count() == 42);
  for (int n = 0; n < 28; ++n) CHECK(cox.degree(n) == 3);
  CHECK(vertex_transitive(cox));
  CHECK(enumerate_hamiltonian_cycles(cox).empty());
}

TEST_CASE("angular girth agrees with the path oracle") {
  const LabeledGraph L = moebius_ladder_L();
  CHECK(angular_girth(L) == 6);
  CHECK(oracle::naive_angular_girth(L) == 6);
  CHECK(angular_girth(rim_of_L()) == 8);
  LabeledGraph tri(3);
  for (int i = 0; i < 3; ++i) tri.add_edge(i, (i + 1) % 3, AngleLabel::kTriangle);
  CHECK(angular_girth(tri) == 3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    LabeledGraph g = oracle::random_graph(rng, 3 + trial % 6, 4, trial % 2 == 0);
    LabeledGraph labeled(g.node_count());
    for (const auto& e : g.edges()) {
      const auto label = static_cast<AngleLabel>(std::uniform_int_distribution<int>(0, 2)(rng));
      labeled.add_edge(e.u, e.v, label);
    }
    CHECK(angular_girth(labeled) == oracle::naive_angular_girth(labeled));
  }
}

TEST_CASE("labeled isomorphism") {
  const LabeledGraph L = moebius_ladder_L();
  auto self = labeled_isomorphic(L, L);
  REQUIRE(self.has_value());
  CHECK_FALSE(labeled_isomorphic(L, rim_of_L()).has_value());
  std::mt19937_64 rng(5);
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(labeled_isomorphic(oracle::relabel(L, perm), L).has_value());
  }
  // Swapping one rim label breaks the isomorphism.
  LabeledGraph broken(8);
  for (int e = 0; e < L.edge_count(); ++e) {
    const auto& ed = L.edge(e);
    auto label = ed.label;
    if (e == 0) label = label == AngleLabel::kSmall ? AngleLabel::kTriangle : AngleLabel::kSmall;
    broken.add_edge(ed.u, ed.v, label, ed.rung);
  }
  CHECK_FALSE(labeled_isomorphic(broken, L).has_value());
  CHECK_FALSE(oracle::brute_isomorphic(broken, L));
}

TEST_CASE("graph files parse and report bad lines") {
  const LabeledGraph g = parse_graph("node a\nnode b\nnode c\nedge a b t\nedge b c l\nedge c a L\n");
  CHECK(g.node_count() == 3);
  CHECK(angular_girth(g) == 4);
  try {
    parse_graph("node a\nedge a b\n");
    FAIL("expected a parse error");
  } catch (const GraphParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("node a\nedge a a\n"), GraphParseError);
  CHECK_THROWS_AS(parse_graph("bogus\n"), GraphParseError);
}
