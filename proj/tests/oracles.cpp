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

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

using hamsurf::AngleLabel;
using hamsurf::LabeledGraph;

namespace {

int weight(const hamsurf::GraphEdge& e) {
  return e.label == AngleLabel::kLarge ? 2 : 1;
}

}  // namespace

std::set<EdgeSet> naive_hamiltonian_cycles(const LabeledGraph& g) {
  const int n = g.node_count();
  std::set<EdgeSet> out;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<std::vector<int>> choices;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int u = order[i];
      const int v = order[(i + 1) % n];
      std::vector<int> between;
      for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) between.push_back(e);
      }
      ok = !between.empty();
      choices.push_back(std::move(between));
    }
    if (!ok) continue;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      EdgeSet edges;
      for (int i = 0; i < n; ++i) edges.push_back(choices[i][pick[i]]);
      std::sort(edges.begin(), edges.end());
      if (std::adjacent_find(edges.begin(), edges.end()) == edges.end()) out.insert(edges);
      int i = 0;
      while (i < n && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return out;
}

std::optional<int> naive_angular_girth(const LabeledGraph& g) {
  std::optional<int> best;
  std::vector<char> on_path(g.node_count(), 0);
  std::vector<char> used(g.edge_count(), 0);
  // Closed walks from `start` through nodes > start, without repeated nodes.
  auto dfs = [&](auto&& self, int start, int node, int total) -> void {
    for (int e : g.incident(node)) {
      if (used[e]) continue;
      const int next = g.edge(e).other(node);
      const int w = total + weight(g.edge(e));
      if (next == start) {
        if (!best || w < *best) best = w;
        continue;
      }
      if (next < start || on_path[next]) continue;
      used[e] = on_path[next] = 1;
      self(self, start, next, w);
      used[e] = on_path[next] = 0;
    }
  };
  for (int s = 0; s < g.node_count(); ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s, 0);
    on_path[s] = 0;
  }
  return best;
}

bool brute_orientable(const hamsurf::Complex2& c) {
  const std::size_t f = c.face_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
    std::map<int, int> flow;  // forward edge index -> signed count
    for (std::size_t i = 0; i < f; ++i) {
      const int sign = (mask >> i) & 1 ? -1 : 1;
      for (hamsurf::EdgeId e : c.face(hamsurf::FaceId(static_cast<int32_t>(i))).boundary) {
        flow[e.index() / 2] += (e.index() % 2 == 0 ? 1 : -1) * sign;
      }
    }
    if (std::all_of(flow.begin(), flow.end(), [](auto& kv) { return kv.second == 0; })) {
      return true;
    }
  }
  return false;
}

int naive_euler(const hamsurf::Complex2& c) {
  std::set<int> vertices;
  std::set<int> edges;
  for (hamsurf::FaceId f : c.faces()) {
    for (hamsurf::EdgeId e : c.face(f).boundary) {
      edges.insert(e.index() / 2);
      vertices.insert(c.source(e).index());
    }
  }
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(c.face_count());
}

LabeledGraph random_graph(std::mt19937_64& rng, int nodes, int extra_edges, bool allow_parallel) {
  LabeledGraph g(nodes);
  std::set<std::pair<int, int>> seen;
  // Random spanning tree keeps the graph connected.
  for (int v = 1; v < nodes; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    g.add_edge(u, v);
    seen.emplace(u, v);
  }
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  for (int k = 0; k < extra_edges; ++k) {
    int u = pick(rng);
    int v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!allow_parallel && !seen.emplace(u, v).second) continue;
    g.add_edge(u, v);
  }
  return g;
}

LabeledGraph random_cubic(std::mt19937_64& rng, int nodes) {
  // Configuration model, retried until simple and connected.
  while (true) {
    std::vector<int> stubs;
    for (int v = 0; v < nodes; ++v) stubs.insert(stubs.end(), 3, v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const int u = std::min(stubs[i], stubs[i + 1]);
      const int v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && seen.emplace(u, v).second;
    }
    if (!simple) continue;
    LabeledGraph g(nodes);
    for (auto [u, v] : seen) g.add_edge(u, v);
    if (g.connected()) return g;
  }
}

LabeledGraph relabel(const LabeledGraph& g, const std::vector<int>& perm) {
  LabeledGraph out(g.node_count());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v], e.label, e.rung);
  return out;
}

LabeledGraph chart_link(const hamsurf::ChartData& data, const std::string& vertex,
                        const std::vector<std::string>& faces) {
  std::map<std::string, std::pair<std::string, std::string>> ends;
  for (const auto& e : data.edges) ends[e.symbol] = {e.from, e.to};
  LabeledGraph g;
  std::map<std::string, int> node;
  auto germ = [&](const std::string& name) {
    auto [it, fresh] = node.emplace(name, g.node_count());
    if (fresh) g.add_node(name);
    return it->second;
  };
  for (const auto& e : data.edges) {
    if (e.from == vertex) germ(e.symbol + "+");
    if (e.to == vertex) germ(e.symbol + "-");
  }
  for (const auto& f : data.faces) {
    if (std::find(faces.begin(), faces.end(), f.id) == faces.end()) continue;
    const int n = static_cast<int>(f.word.size());
    for (int i = 0; i < n; ++i) {
      // Corner i sits where letter i-1 ends and letter i starts.
      const auto& in = f.word[(i + n - 1) % n];
      const auto& out = f.word[i];
      const auto& [from, to] = ends[out.symbol];
      const std::string at = out.forward ? from : to;
      if (at != vertex) continue;
      const std::string leave = out.symbol + (out.forward ? "+" : "-");
      const std::string back = in.symbol + (in.forward ? "-" : "+");
      AngleLabel label = AngleLabel::kTriangle;
      if (f.kind == hamsurf::FaceKind::kLozenge) {
        label = i % 2 == 0 ? AngleLabel::kSmall : AngleLabel::kLarge;
      }
      g.add_edge(germ(leave), germ(back), label);
    }
  }
  return g;
}

bool brute_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  auto profile = [](const LabeledGraph& g, const std::vector<int>& perm) {
    std::multiset<std::tuple<int, int, int>> out;
    for (const auto& e : g.edges()) {
      const int u = perm[e.u];
      const int v = perm[e.v];
      out.emplace(std::min(u, v), std::max(u, v), e.label ? static_cast<int>(*e.label) : -1);
    }
    return out;
  };
  std::vector<int> ident(b.node_count());
  std::iota(ident.begin(), ident.end(), 0);
  const auto target = profile(b, ident);
  std::vector<int> perm = ident;
  do {
    if (profile(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

using Word = std::vector<std::pair<int, int>>;  // (oriented edge, corner label)

Word face_word(const hamsurf::Complex2& c, hamsurf::FaceId f) {
  const auto& face = c.face(f);
  Word w;
  for (int i = 0; i < face.size(); ++i) {
    w.emplace_back(static_cast<int>(face.boundary[i].index()), static_cast<int>(face.corners[i]));
  }
  return w;
}

// Least rotation of the word and of its reversal.
Word canonical(const Word& w) {
  const int n = static_cast<int>(w.size());
  Word reflected(n);
  for (int j = 0; j < n; ++j) {
    reflected[j] = {w[n - 1 - j].first ^ 1, w[(n - j) % n].second};
  }
  Word best = w;
  for (const Word& base : {w, reflected}) {
    for (int s = 0; s < n; ++s) {
      Word r(base.begin() + s, base.end());
      r.insert(r.end(), base.begin(), base.begin() + s);
      best = std::min(best, r);
    }
  }
  return best;
}

}  // namespace

std::vector<std::vector<int>> brute_automorphisms(const hamsurf::Complex2& c) {
  const int nv = static_cast<int>(c.vertex_count());
  const int ne = static_cast<int>(c.unoriented_edge_count());
  std::multiset<Word> faces;
  for (hamsurf::FaceId f : c.faces()) faces.insert(canonical(face_word(c, f)));
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(nv);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<int> image(2 * ne, -1);
    std::vector<char> taken(ne, 0);
    auto extend = [&](auto&& self, int k) -> void {
      if (k == ne) {
        std::multiset<Word> mapped;
        for (hamsurf::FaceId f : c.faces()) {
          Word w = face_word(c, f);
          for (auto& letter : w) letter.first = image[letter.first];
          mapped.insert(canonical(w));
        }
        if (mapped == faces) out.push_back(image);
        return;
      }
      const hamsurf::EdgeId e(2 * k);
      for (int t = 0; t < 2 * ne; ++t) {
        if (taken[t / 2]) continue;
        const hamsurf::EdgeId target(t);
        if (static_cast<int>(c.source(target).index()) != sigma[c.source(e).index()] ||
            static_cast<int>(c.target(target).index()) != sigma[c.target(e).index()]) {
          continue;
        }
        taken[t / 2] = 1;
        image[2 * k] = t;
        image[2 * k + 1] = t ^ 1;
        self(self, k + 1);
        taken[t / 2] = 0;
      }
    };
    extend(extend, 0);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int permutation_order(const std::vector<int>& perm) {
  std::vector<int> power = perm;
  for (int k = 1;; ++k) {
    bool identity = true;
    for (std::size_t i = 0; i < power.size(); ++i) identity = identity && power[i] == static_cast<int>(i);
    if (identity) return k;
    for (auto& p : power) p = perm[p];
  }
}

}  // namespace oracle
