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

#include "hamsurf/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hamsurf/chart.hpp"
#include "hamsurf/cover.hpp"
#include "hamsurf/hamgraph.hpp"
#include "hamsurf/hamsurface.hpp"
#include "hamsurf/quotient.hpp"

namespace hamsurf {
namespace {

using nlohmann::json;

constexpr int kExhaustiveCap = 2;

json cycle_json(const LabeledGraph& g, const HamCycle& cycle) {
  const RungReport rungs = rung_report(g, cycle);
  return json{{"nodes", cycle.nodes},
              {"rungs", cycle.rung_count},
              {"omitted_rungs", rungs.omitted},
              {"type", to_string(classify_cycle(cycle))},
              {"angular_length", cycle.labels.angular_length()}};
}

json surface_json(const SurfaceReport& r) {
  json j{{"closed", r.is_closed_surface},
         {"euler_characteristic", r.euler_characteristic},
         {"orientable", r.orientable},
         {"components", r.components}};
  if (r.genus_or_crosscaps) j[r.orientable ? "genus" : "crosscaps"] = *r.genus_or_crosscaps;
  return j;
}

json census_json(const Ball& ball) {
  json rows = json::array();
  for (const CensusRow& row : ball_census(ball)) {
    rows.push_back(json{{"depth", row.depth},
                        {"vertices", row.vertices},
                        {"edges", row.edges},
                        {"triangles", row.triangles},
                        {"lozenges", row.lozenges}});
  }
  return rows;
}

int element_order(const Complex2& c, const CellMap& g) {
  CellMap power = g;
  for (int k = 1; k <= 64; ++k) {
    if (is_identity(power)) return k;
    power = compose(g, power, c);
  }
  return 0;
}

struct Loaded {
  ChartData data;
  Complex2 v;
};

// Loads the charts or returns the error certificate describing why not.
std::optional<Loaded> load_quotient(const CommandOptions& options, const std::string& command,
                                    const std::string& digest, std::vector<Certificate>& out) {
  try {
    Loaded l{load_charts(options.charts), {}};
    l.v = build_V(l.data);
    return l;
  } catch (const std::exception& e) {
    out.push_back(error_certificate(command + ".fixture", "the charts fixture loads", e.what(),
                                    digest));
    return std::nullopt;
  }
}

}  // namespace

std::vector<Certificate> cmd_check_ladder(const CommandOptions& options) {
  std::vector<Certificate> out;
  const std::string digest = fixture_digest(options.coxeter);
  const LabeledGraph L = moebius_ladder_L();
  const std::vector<HamCycle> cycles = enumerate_hamiltonian_cycles(L);

  {
    std::map<int, int> by_rungs;
    bool consecutive = true;
    json list = json::array();
    for (const HamCycle& c : cycles) {
      ++by_rungs[c.rung_count];
      if (c.rung_count == 2) consecutive = consecutive && rung_report(L, c).omitted_consecutive;
      list.push_back(cycle_json(L, c));
    }
    const bool pass = cycles.size() == 5 && by_rungs == std::map<int, int>{{0, 1}, {2, 4}} &&
                      consecutive;
    json hist = json::object();
    for (auto [r, n] : by_rungs) hist[std::to_string(r)] = n;
    out.push_back(make_certificate(
        "ladder.census",
        "the labeled Moebius ladder L has exactly five Hamiltonian cycles: one with no rungs "
        "and four with two rungs, each omitting two consecutive rungs",
        pass,
        json{{"cycles", list}, {"count", cycles.size()}, {"by_rungs", hist},
             {"two_rung_cycles_omit_consecutive", consecutive}},
        digest));
  }
  {
    std::map<std::string, int> types;
    for (const HamCycle& c : cycles) ++types[std::string(to_string(classify_cycle(c)))];
    const bool pass =
        types == std::map<std::string, int>{{std::string(to_string(CycleType::kType1)), 1},
                                            {std::string(to_string(CycleType::kType2)), 2},
                                            {std::string(to_string(CycleType::kType3)), 2}};
    out.push_back(make_certificate(
        "ladder.types",
        "the five cycles split into one Type1, two Type2 and two Type3 cycles, so exactly two "
        "link types are admissible",
        pass, json{{"types", types}}, digest));
  }
  {
    const std::vector<int> per_edge = cycles_per_edge(L, cycles);
    const bool pass = std::all_of(per_edge.begin(), per_edge.end(), [](int n) { return n % 2 == 0; });
    const std::optional<int> girth = angular_girth(L);
    out.push_back(make_certificate(
        "ladder.parity",
        "every edge of the cubic graph L lies on an even number of Hamiltonian cycles, and the "
        "angular girth of L is 6",
        pass && girth == 6,
        json{{"cycles_per_edge", per_edge}, {"angular_girth", girth ? json(*girth) : json()}},
        digest));
  }
  try {
    const LabeledGraph cox = load_graph(options.coxeter);
    bool cubic = true;
    for (int n = 0; n < cox.node_count(); ++n) cubic = cubic && cox.degree(n) == 3;
    const std::size_t found = enumerate_hamiltonian_cycles(cox).size();
    out.push_back(make_certificate(
        "coxeter.non_hamiltonian",
        "the 28-vertex Coxeter graph, cubic of girth 7, has no Hamiltonian cycle",
        cubic && cox.node_count() == 28 && found == 0,
        json{{"nodes", cox.node_count()}, {"edges", cox.edge_count()}, {"cubic", cubic},
             {"hamiltonian_cycles", found}},
        digest));
  } catch (const std::exception& e) {
    out.push_back(error_certificate(
        "coxeter.non_hamiltonian",
        "the 28-vertex Coxeter graph, cubic of girth 7, has no Hamiltonian cycle", e.what(),
        digest));
  }
  return out;
}

std::vector<Certificate> cmd_check_quotient(const CommandOptions& options) {
  std::vector<Certificate> out;
  const std::string digest = fixture_digest(options.charts);
  auto loaded = load_quotient(options, "quotient", digest, out);
  if (!loaded) return out;
  const Complex2& V = loaded->v;
  {
    json problems = json::array();
    for (const Violation& v : validate_quotient_charts(loaded->data)) {
      problems.push_back(v.cell + ": " + v.message);
    }
    for (const Violation& v : validate_complex(V)) problems.push_back(v.cell + ": " + v.message);
    out.push_back(make_certificate(
        "quotient.charts",
        "the charts describe a valid complex V with 3 vertices, 12 edges, 4 triangles and 6 "
        "lozenges",
        problems.empty(),
        json{{"vertices", V.vertex_count()}, {"edges", V.unoriented_edge_count()},
             {"faces", V.face_count()}, {"violations", problems}},
        digest));
  }
  {
    const LabeledGraph L = moebius_ladder_L();
    json degrees = json::object();
    bool all_three = true;
    for (std::size_t k = 0; k < V.unoriented_edge_count(); ++k) {
      const EdgeId e(static_cast<int32_t>(2 * k));
      const int d = edge_face_degree(V, e);
      degrees[V.edge(e).name] = d;
      all_three = all_three && d == 3;
    }
    json links = json::object();
    bool all_L = true;
    for (VertexId v : V.vertices()) {
      const bool iso = labeled_isomorphic(vertex_link(V, v).graph, L).has_value();
      links[V.vertex_name(v)] = iso;
      all_L = all_L && iso;
    }
    out.push_back(make_certificate(
        "quotient.order_two",
        "every edge of V lies on exactly three faces and every vertex link of V is "
        "label-isomorphic to L",
        all_three && all_L, json{{"edge_face_degree", degrees}, {"link_is_L", links}}, digest));
  }
  for (const std::string name : {"S", "S'"}) {
    const Complex2 s = build_surface(loaded->data, name);
    const SurfaceReport r = surface_report(s);
    json lengths = json::object();
    bool tens = true;
    for (VertexId v : s.vertices()) {
      try {
        const int len = link_circle_length(s, v);
        lengths[s.vertex_name(v)] = len;
        tens = tens && len == 10;
      } catch (const std::exception& e) {
        lengths[s.vertex_name(v)] = e.what();
        tens = false;
      }
    }
    const bool pass = r.is_closed_surface && r.orientable && r.euler_characteristic == -2 &&
                      r.genus_or_crosscaps == 2 && tens && s.vertex_count() == 3;
    json w = surface_json(r);
    w["faces"] = surface_face_names(loaded->data, name);
    w["link_angular_length"] = lengths;
    out.push_back(make_certificate(
        name == "S" ? "quotient.surface_S" : "quotient.surface_S'",
        fmt::format("{} is a closed orientable surface of genus 2 whose three vertex links are "
                    "circles of angular length 10",
                    name),
        pass, w, digest));
  }
  {
    json pieces = json::array();
    std::map<std::string, bool> expect_orientable{{"x", true}, {"y", true}, {"z", false}};
    bool pass = true;
    const auto census = flat_piece_census(V);
    for (const FlatPiece& p : census) {
      json j = surface_json(p.report);
      j["faces"] = {p.first, p.second};
      pieces.push_back(j);
      const auto it = expect_orientable.find(p.first);
      pass = pass && it != expect_orientable.end() && p.report.is_closed_surface &&
             p.report.euler_characteristic == 0 && p.report.orientable == it->second;
    }
    pass = pass && census.size() == 3;
    out.push_back(make_certificate(
        "quotient.flat_pieces",
        "x with x' and y with y' form tori, and z with z' forms a Klein bottle", pass,
        json{{"pieces", pieces}}, digest));
  }
  return out;
}

std::vector<Certificate> cmd_check_cover(const CommandOptions& options) {
  std::vector<Certificate> out;
  const std::string digest = fixture_digest(options.charts);
  auto loaded = load_quotient(options, "cover", digest, out);
  if (!loaded) return out;
  const Complex2& V = loaded->v;
  const int n = options.radius;
  std::vector<std::vector<Ball>> chains;
  try {
    for (VertexId v : V.vertices()) {
      std::vector<Ball> chain{base_ball(V, v)};
      for (int r = 1; r <= n; ++r) chain.push_back(expand_ball(V, chain.back()));
      chains.push_back(std::move(chain));
    }
  } catch (const std::exception& e) {
    out.push_back(error_certificate("cover.verify", "balls of the universal cover can be built",
                                    e.what(), digest));
    return out;
  }
  {
    bool pass = true;
    json bases = json::object();
    for (const auto& chain : chains) {
      const Ball& b = chain.back();
      const CoverReport rep = verify_cover(V, b);
      int girth = 0;
      bool links = true;
      for (const VertexCheck& vc : rep.vertices) {
        if (!vc.interior) continue;
        links = links && vc.link_matches;
        if (vc.girth && (girth == 0 || *vc.girth < girth)) girth = *vc.girth;
      }
      pass = pass && rep.pass && links && girth == 6;
      bases[V.vertex_name(b.covering.vertices.at(b.base.index()))] =
          json{{"pass", rep.pass},
               {"interior_vertices", rep.interior_vertices},
               {"interior_links_are_L", links},
               {"min_interior_girth", girth},
               {"census", census_json(b)},
               {"violations", rep.violations}};
    }
    out.push_back(make_certificate(
        "cover.verify",
        fmt::format("the radius-{} ball from every base vertex is a valid piece of the "
                    "universal cover: edge degree 3, interior links isomorphic to L, girth 6",
                    n),
        pass, json{{"radius", n}, {"bases", bases}}, digest));
  }
  {
    bool pass = true;
    json bases = json::object();
    for (const auto& chain : chains) {
      json steps = json::array();
      for (int r = 1; r <= n; ++r) {
        const bool same = same_ball(restrict_to_radius(V, chain[r], r - 1), chain[r - 1]);
        steps.push_back(same);
        pass = pass && same;
      }
      bases[V.vertex_name(chain.back().covering.vertices.at(chain.back().base.index()))] = steps;
    }
    out.push_back(make_certificate(
        "cover.idempotent",
        "restricting each ball to a smaller radius reproduces the smaller ball exactly", pass,
        json{{"radius", n}, {"restriction_matches", bases}}, digest));
  }
  {
    json rows = json::object();
    bool pass = true;
    const json first = census_json(chains.front().back());
    for (const auto& chain : chains) {
      const json c = census_json(chain.back());
      pass = pass && c == first;
      rows[V.vertex_name(chain.back().covering.vertices.at(chain.back().base.index()))] =
          json{{"vertices", chain.back().complex.vertex_count()},
               {"edges", chain.back().complex.unoriented_edge_count()},
               {"faces", chain.back().complex.face_count()}};
    }
    out.push_back(make_certificate(
        "cover.base_independence",
        "balls of equal radius around different base vertices have the same depth census",
        pass, json{{"radius", n}, {"sizes", rows}}, digest));
  }
  return out;
}

namespace {

struct BaseSurfaces {
  std::string base;
  Ball ball;
  SurfaceAmbient ambient;
  std::set<FaceSet> found;
  std::map<FaceSet, std::pair<FaceId, LocalChoice>> first_seed;
  std::size_t runs = 0;
  std::size_t seeds = 0;
  bool all_surface = true;
  bool choices_differ = true;
  bool confluent = true;
};

}  // namespace

std::vector<Certificate> cmd_find_surfaces(const CommandOptions& options) {
  std::vector<Certificate> out;
  const std::string digest = fixture_digest(options.charts);
  auto loaded = load_quotient(options, "surfaces", digest, out);
  if (!loaded) return out;
  const Complex2& V = loaded->v;
  const int n = options.radius;
  const auto s_faces = surface_face_names(loaded->data, "S");
  const auto sp_faces = surface_face_names(loaded->data, "S'");

  std::vector<BaseSurfaces> per_base;
  try {
    for (VertexId v : V.vertices()) {
      per_base.push_back(BaseSurfaces{V.vertex_name(v), build_ball(V, v, n), {}, {}, {}});
    }
  } catch (const std::exception& e) {
    out.push_back(error_certificate("surfaces.propagation", "balls can be built", e.what(),
                                    digest));
    return out;
  }
  for (BaseSurfaces& b : per_base) {
    b.ambient = SurfaceAmbient::interior(b.ball);
    const Complex2& c = b.ball.complex;
    for (FaceId f : c.faces()) {
      if (!b.ambient.face_in_domain[f.index()] || c.face(f).kind != FaceKind::kLozenge) continue;
      ++b.seeds;
      FaceSet results[2];
      for (int k = 0; k < 2; ++k) {
        const LocalChoice choice = k == 0 ? LocalChoice::kA : LocalChoice::kB;
        const PropagationResult r = propagate_surface(b.ambient, f, choice, {});
        ++b.runs;
        b.all_surface = b.all_surface && r.status == PropagationStatus::kSurface;
        results[k] = r.members;
        b.found.insert(r.members);
        b.first_seed.emplace(r.members, std::make_pair(f, choice));
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
          const PropagationResult shuffled =
              propagate_surface(b.ambient, f, choice, PropagationOptions{seed});
          b.confluent = b.confluent && shuffled.members == r.members;
        }
      }
      b.choices_differ = b.choices_differ && results[0] != results[1];
    }
  }

  {
    bool pass = true;
    json bases = json::object();
    for (const BaseSurfaces& b : per_base) {
      json sizes = json::array();
      json surfaces = json::array();
      const Complex2& c = b.ball.complex;
      for (const FaceSet& s : b.found) {
        sizes.push_back(s.size());
        json by_image = json::object();
        for (FaceId f : s) {
          by_image[V.face(b.ball.covering.faces[f.index()].face).name].push_back(c.face(f).name);
        }
        const auto& [seed, choice] = b.first_seed.at(s);
        surfaces.push_back(json{{"seed", c.face(seed).name},
                                {"choice", choice == LocalChoice::kA ? "A" : "B"},
                                {"faces_by_image", by_image}});
      }
      pass = pass && b.all_surface && b.choices_differ && b.found.size() == 2;
      bases[b.base] = json{{"seed_lozenges", b.seeds},
                           {"runs", b.runs},
                           {"all_runs_complete", b.all_surface},
                           {"choices_differ", b.choices_differ},
                           {"distinct_surfaces", b.found.size()},
                           {"surface_sizes", sizes},
                           {"surfaces", surfaces}};
    }
    out.push_back(make_certificate(
        "surfaces.propagation",
        fmt::format("on the radius-{} ball, propagation from any seed lozenge under the two "
                    "local choices yields exactly two Hamiltonian surfaces",
                    n),
        pass, json{{"radius", n}, {"bases", bases}}, digest));
  }
  {
    bool pass = true;
    json bases = json::object();
    for (const BaseSurfaces& b : per_base) {
      json rows = json::array();
      for (const FaceSet& s : b.found) {
        const SurfaceVerdict h = is_hamiltonian(b.ambient, s);
        std::map<std::string, int> types;
        bool subword = true;
        for (const VertexTrace& t : vertex_traces(b.ambient, s)) {
          ++types[t.cycle ? std::string(to_string(*t.type)) : "none"];
          subword = subword && t.subword_rule;
        }
        pass = pass && h.ok && subword && types.size() == 1 &&
               types.count(std::string(to_string(CycleType::kType3)));
        rows.push_back(json{{"hamiltonian", h.ok}, {"reason", h.reason},
                            {"trace_types", types}, {"subword_rule", subword}});
      }
      bases[b.base] = rows;
    }
    out.push_back(make_certificate(
        "surfaces.traces",
        "each surface covers every interior edge twice and traces a Type3 Hamiltonian cycle "
        "in every interior vertex link",
        pass, json{{"bases", bases}}, digest));
  }
  {
    json bases = json::object();
    bool pass = true;
    std::string error;
    for (const BaseSurfaces& b : per_base) {
      if (n > kExhaustiveCap) {
        error = fmt::format("exhaustive oracle is capped at radius {}", kExhaustiveCap);
        break;
      }
      try {
        const ExhaustiveResult type3 =
            count_surfaces_exhaustive(b.ambient, TraceMode::kType3, options.budget);
        const ExhaustiveResult any =
            count_surfaces_exhaustive(b.ambient, TraceMode::kAnyHamiltonian, options.budget);
        const std::set<FaceSet> oracle(type3.surfaces.begin(), type3.surfaces.end());
        const bool same = oracle == b.found && type3.surfaces.size() == oracle.size();
        pass = pass && same;
        bases[b.base] = json{{"type3_surfaces", type3.surfaces.size()},
                             {"type3_nodes", type3.nodes},
                             {"any_hamiltonian_surfaces", any.surfaces.size()},
                             {"any_hamiltonian_nodes", any.nodes},
                             {"matches_propagation", same}};
      } catch (const BudgetExceeded& e) {
        error = e.what();
        break;
      }
    }
    const std::string statement =
        "an exhaustive search over interior faces finds the same two surfaces as propagation";
    if (error.empty()) {
      out.push_back(make_certificate("surfaces.oracle", statement, pass,
                                     json{{"budget", options.budget}, {"bases", bases}},
                                     digest));
    } else {
      out.push_back(error_certificate("surfaces.oracle", statement, error, digest));
    }
  }
  {
    bool pass = true;
    json bases = json::object();
    for (const BaseSurfaces& b : per_base) {
      const Complex2& c = b.ball.complex;
      FaceSet triangles;
      for (FaceId f : c.faces()) {
        if (b.ambient.face_in_domain[f.index()] && c.face(f).kind == FaceKind::kTriangle) {
          triangles.push_back(f);
        }
      }
      FaceSet common;
      if (b.found.size() == 2) {
        std::set_intersection(b.found.begin()->begin(), b.found.begin()->end(),
                              b.found.rbegin()->begin(), b.found.rbegin()->end(),
                              std::back_inserter(common));
      }
      const bool ok = b.found.size() == 2 && common == triangles;
      pass = pass && ok;
      bases[b.base] = json{{"interior_triangles", triangles.size()},
                           {"common_faces", common.size()},
                           {"intersection_is_triangles", ok}};
    }
    out.push_back(make_certificate(
        "surfaces.triangles",
        "both surfaces contain every interior triangle, and they share nothing else", pass,
        json{{"bases", bases}}, digest));
  }
  {
    bool pass = true;
    json bases = json::object();
    for (const BaseSurfaces& b : per_base) {
      std::map<std::string, int> verdicts;
      json images = json::array();
      for (const FaceSet& s : b.found) {
        const PeriodicityResult p = periodicity_check(V, b.ball.covering, s, s_faces, sp_faces);
        ++verdicts[std::string(to_string(p.verdict))];
        images.push_back(p.image);
      }
      pass = pass && verdicts == std::map<std::string, int>{{"S", 1}, {"S'", 1}};
      bases[b.base] = json{{"projections", verdicts}, {"images", images}};
    }
    out.push_back(make_certificate(
        "surfaces.periodicity",
        "under the covering map one surface projects onto exactly the faces of S and the other "
        "onto exactly the faces of S'",
        pass, json{{"bases", bases}}, digest));
  }
  {
    bool pass = true;
    json bases = json::object();
    for (const BaseSurfaces& b : per_base) {
      pass = pass && b.confluent;
      bases[b.base] = b.confluent;
    }
    out.push_back(make_certificate(
        "surfaces.confluence",
        "propagation returns the same face set under shuffled worklist orders", pass,
        json{{"shuffle_seeds", json::array({1, 2, 3, 4})}, {"bases", bases}}, digest));
  }
  return out;
}

std::vector<Certificate> cmd_check_aut(const CommandOptions& options) {
  std::vector<Certificate> out;
  const std::string digest = fixture_digest(options.charts);
  auto loaded = load_quotient(options, "aut", digest, out);
  if (!loaded) return out;
  const Complex2& V = loaded->v;
  const std::vector<CellMap> group = automorphism_group(V);
  const std::vector<CellMap> cross = automorphisms(V);
  const auto s_faces = surface_face_names(loaded->data, "S");
  const auto sp_faces = surface_face_names(loaded->data, "S'");
  const ThetaReport theta = verify_theta_relations(V, group, s_faces, sp_faces);

  out.push_back(make_certificate(
      "aut.order",
      "the cellular automorphism group of the complex has order 8; the complex checked is the "
      "quotient V, read as the complex the claim names",
      group.size() == 8 && cross == group,
      json{{"order", group.size()}, {"independent_search_order", cross.size()},
           {"searches_agree", cross == group}, {"object", "V"}},
      digest));
  {
    std::map<std::string, int> orders;
    for (const CellMap& g : group) ++orders[std::to_string(element_order(V, g))];
    out.push_back(make_certificate(
        "aut.exponent_two",
        "every automorphism is an involution or the identity, so the group is (Z/2)^3",
        theta.exponent_two && theta.group_abelian,
        json{{"element_orders", orders}, {"abelian", theta.group_abelian},
             {"thetas_commute_pairwise", theta.pairwise_commute}},
        digest));
  }
  {
    json actions = json::array();
    for (const auto& per_theta : theta.actions) {
      json a = json::object();
      for (const FaceAction& f : per_theta) {
        a[f.face] = json{{"image", f.image}, {"shift", f.shift}, {"reflected", f.reflected}};
      }
      actions.push_back(a);
    }
    out.push_back(make_certificate(
        "aut.thetas",
        "the three edge tables theta1, theta2, theta3 define involutive automorphisms that "
        "generate the whole group",
        theta.all_defined && theta.all_in_group && theta.all_involutions &&
            theta.generates_group,
        json{{"defined", theta.all_defined}, {"in_group", theta.all_in_group},
             {"involutions", theta.all_involutions},
             {"generated_order", theta.generated_order}, {"face_actions", actions}},
        digest));
  }
  {
    json image;
    if (auto t2 = map_from_table(V, theta_table(2))) image = image_of_faces(V, *t2, s_faces);
    out.push_back(make_certificate(
        "aut.theta2_swaps_surfaces", "theta2 carries the faces of S onto the faces of S'",
        theta.theta2_swaps_surfaces,
        json{{"S", s_faces}, {"theta2_of_S", image}, {"S'", sp_faces}}, digest));
  }
  return out;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-ladder", "check-quotient", "check-cover",
                                              "find-surfaces", "check-aut"};
  return names;
}

std::vector<Certificate> run_command(const std::string& name, const CommandOptions& options) {
  if (name == "check-ladder") return cmd_check_ladder(options);
  if (name == "check-quotient") return cmd_check_quotient(options);
  if (name == "check-cover") return cmd_check_cover(options);
  if (name == "find-surfaces") return cmd_find_surfaces(options);
  if (name == "check-aut") return cmd_check_aut(options);
  if (name == "check-all") return cmd_check_all(options);
  throw std::invalid_argument("unknown command " + name);
}

std::vector<Certificate> cmd_check_all(const CommandOptions& options) {
  std::vector<Certificate> all;
  for (const std::string& name : command_names()) {
    auto part = run_command(name, options);
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace hamsurf
