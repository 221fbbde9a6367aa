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

#include "hamsurf/hamgraph.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hamsurf {

std::string_view to_string(CycleType type) {
  switch (type) {
    case CycleType::kType1:
      return "type1";
    case CycleType::kType2:
      return "type2";
    case CycleType::kType3:
      return "type3";
    case CycleType::kOther:
      return "other";
  }
  return "other";
}

namespace {

void add_label(LabelCounts& counts, const GraphEdge& e) {
  if (!e.label) {
    ++counts.unlabeled;
    return;
  }
  switch (*e.label) {
    case AngleLabel::kTriangle:
      ++counts.t;
      break;
    case AngleLabel::kSmall:
      ++counts.small;
      break;
    case AngleLabel::kLarge:
      ++counts.large;
      break;
  }
}

HamCycle make_cycle(const LabeledGraph& g, std::vector<int> nodes, std::vector<int> edges) {
  HamCycle c;
  c.nodes = std::move(nodes);
  c.edges = std::move(edges);
  for (int e : c.edges) {
    add_label(c.labels, g.edge(e));
    if (g.edge(e).rung) ++c.rung_count;
  }
  return c;
}

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const LabeledGraph& g)
      : g_(g), n_(g.node_count()), visited_(n_, 0) {}

  std::vector<HamCycle> run() {
    visited_[0] = 1;
    path_.push_back(0);
    extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(int cur) {
    if (static_cast<int>(path_.size()) == n_) {
      if (path_[1] > path_.back()) return;  // keep one direction only
      for (int e : g_.incident(cur)) {
        if (g_.edge(e).other(cur) != 0) continue;
        std::vector<int> edges = edges_;
        edges.push_back(e);
        found_.push_back(make_cycle(g_, path_, std::move(edges)));
      }
      return;
    }
    for (int e : g_.incident(cur)) {
      const int next = g_.edge(e).other(cur);
      if (visited_[next]) continue;
      visited_[next] = 1;
      path_.push_back(next);
      edges_.push_back(e);
      if (feasible(next)) extend(next);
      edges_.pop_back();
      path_.pop_back();
      visited_[next] = 0;
    }
  }

  // Every unvisited node still needs two neighbours among the unvisited
  // nodes and the two path ends, and the unvisited nodes must be connected.
  bool feasible(int end) const {
    const int remaining = n_ - static_cast<int>(path_.size());
    if (remaining == 0) return true;
    bool end_ok = false;
    bool start_ok = false;
    int first_free = -1;
    for (int u = 0; u < n_; ++u) {
      if (visited_[u]) continue;
      if (first_free < 0) first_free = u;
      int usable = 0;
      int last = -1;
      for (int e : g_.incident(u)) {
        const int w = g_.edge(e).other(u);
        if (w == last) continue;
        if (!visited_[w] || w == end || w == 0) {
          ++usable;
          last = w;
        }
        if (w == end) end_ok = true;
        if (w == 0) start_ok = true;
      }
      if (usable < 2 && !(remaining == 1 && usable >= 1)) return false;
    }
    if (!end_ok || !start_ok) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{first_free};
    seen[first_free] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e : g_.incident(u)) {
        const int w = g_.edge(e).other(u);
        if (!visited_[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == remaining;
  }

  const LabeledGraph& g_;
  const int n_;
  std::vector<char> visited_;
  std::vector<int> path_;
  std::vector<int> edges_;
  std::vector<HamCycle> found_;
};

}  // namespace

std::vector<HamCycle> enumerate_hamiltonian_cycles(const LabeledGraph& g) {
  if (g.node_count() < 3) {
    throw std::invalid_argument("Hamiltonian cycle enumeration needs at least 3 nodes");
  }
  if (!g.connected()) {
    throw std::invalid_argument("Hamiltonian cycle enumeration needs a connected graph");
  }
  return HamiltonSearch(g).run();
}

std::optional<HamCycle> cycle_from_edges(const LabeledGraph& g, std::vector<int> edges) {
  const int n = g.node_count();
  if (n < 3 || static_cast<int>(edges.size()) != n) return std::nullopt;
  std::vector<std::vector<int>> touching(n);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) return std::nullopt;
    touching[g.edge(e).u].push_back(e);
    touching[g.edge(e).v].push_back(e);
  }
  for (const auto& t : touching) {
    if (t.size() != 2) return std::nullopt;
  }
  std::vector<int> nodes{0};
  std::vector<int> walk;
  int cur = 0;
  int via = touching[0][0];
  for (int step = 0; step < n; ++step) {
    walk.push_back(via);
    cur = g.edge(via).other(cur);
    if (step + 1 < n) {
      if (cur == 0) return std::nullopt;  // closed early: several cycles
      nodes.push_back(cur);
      via = touching[cur][0] == via ? touching[cur][1] : touching[cur][0];
    }
  }
  if (cur != 0) return std::nullopt;
  if (nodes[1] > nodes.back()) {
    std::reverse(nodes.begin() + 1, nodes.end());
    std::reverse(walk.begin(), walk.end());
  }
  return make_cycle(g, std::move(nodes), std::move(walk));
}

LabeledGraph moebius_ladder_L() {
  LabeledGraph g(8);
  for (int i = 0; i < 8; ++i) {
    g.add_edge(i, (i + 1) % 8, i % 2 == 0 ? AngleLabel::kSmall : AngleLabel::kTriangle);
  }
  for (int k = 0; k < 4; ++k) g.add_edge(k, k + 4, AngleLabel::kLarge, true);
  return g;
}

CycleType classify_cycle(const HamCycle& cycle) {
  const LabelCounts& c = cycle.labels;
  if (c.unlabeled > 0) throw std::invalid_argument("classify_cycle: unlabeled edges");
  if (c.t == 4 && c.small == 4 && c.large == 0 && cycle.rung_count == 0) {
    return CycleType::kType1;
  }
  if (c.t == 2 && c.small == 4 && c.large == 2) return CycleType::kType2;
  if (c.t == 4 && c.small == 2 && c.large == 2) return CycleType::kType3;
  return CycleType::kOther;
}

namespace {

int label_code(const GraphEdge& e) {
  return e.label ? static_cast<int>(*e.label) : 3;
}

class IsoSearch {
 public:
  IsoSearch(const LabeledGraph& a, const LabeledGraph& b, bool use_labels)
      : a_(a), b_(b), n_(a.node_count()), use_labels_(use_labels) {
    mult_a_ = multiplicities(a_);
    mult_b_ = multiplicities(b_);
    order_ = bfs_order(a_);
  }

  std::optional<std::vector<int>> find(std::optional<std::pair<int, int>> forced) {
    if (b_.node_count() != n_ || a_.edge_count() != b_.edge_count()) return std::nullopt;
    image_.assign(n_, -1);
    used_.assign(n_, 0);
    if (forced) {
      // Put the forced node first in the order.
      auto it = std::find(order_.begin(), order_.end(), forced->first);
      std::rotate(order_.begin(), it, it + 1);
      forced_ = forced;
    }
    if (assign(0)) return image_;
    return std::nullopt;
  }

 private:
  using Table = std::vector<std::array<int, 4>>;

  Table multiplicities(const LabeledGraph& g) const {
    Table t(static_cast<std::size_t>(g.node_count()) * g.node_count(), {0, 0, 0, 0});
    for (const auto& e : g.edges()) {
      const int code = use_labels_ ? label_code(e) : 0;
      ++t[e.u * g.node_count() + e.v][code];
      ++t[e.v * g.node_count() + e.u][code];
    }
    return t;
  }

  std::array<int, 4> signature(const LabeledGraph& g, int node) const {
    std::array<int, 4> s{0, 0, 0, 0};
    for (int e : g.incident(node)) ++s[use_labels_ ? label_code(g.edge(e)) : 0];
    return s;
  }

  static std::vector<int> bfs_order(const LabeledGraph& g) {
    std::vector<int> order;
    std::vector<char> seen(g.node_count(), 0);
    for (int s = 0; s < g.node_count(); ++s) {
      if (seen[s]) continue;
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        const int u = q.front();
        q.pop();
        order.push_back(u);
        for (int e : g.incident(u)) {
          const int w = g.edge(e).other(u);
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
    }
    return order;
  }

  bool consistent(int u, int x) const {
    if (signature(a_, u) != signature(b_, x)) return false;
    if (mult_a_[u * n_ + u] != mult_b_[x * n_ + x]) return false;
    for (int v = 0; v < n_; ++v) {
      if (image_[v] < 0) continue;
      if (mult_a_[u * n_ + v] != mult_b_[x * n_ + image_[v]]) return false;
    }
    return true;
  }

  bool assign(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int u = order_[depth];
    for (int x = 0; x < n_; ++x) {
      if (used_[x]) continue;
      if (depth == 0 && forced_ && x != forced_->second) continue;
      if (!consistent(u, x)) continue;
      image_[u] = x;
      used_[x] = 1;
      if (assign(depth + 1)) return true;
      image_[u] = -1;
      used_[x] = 0;
    }
    return false;
  }

  const LabeledGraph& a_;
  const LabeledGraph& b_;
  const int n_;
  const bool use_labels_;
  Table mult_a_;
  Table mult_b_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::optional<std::pair<int, int>> forced_;
};

}  // namespace

std::optional<std::vector<int>> labeled_isomorphic(const LabeledGraph& g1,
                                                   const LabeledGraph& g2) {
  return IsoSearch(g1, g2, true).find(std::nullopt);
}

bool vertex_transitive(const LabeledGraph& g) {
  for (int t = 0; t < g.node_count(); ++t) {
    if (!IsoSearch(g, g, false).find(std::make_pair(0, t))) return false;
  }
  return true;
}

std::optional<int> angular_girth(const LabeledGraph& g) {
  if (!g.fully_labeled()) throw std::invalid_argument("angular_girth: unlabeled edges");
  constexpr int kInf = std::numeric_limits<int>::max();
  int best = kInf;
  for (int skip = 0; skip < g.edge_count(); ++skip) {
    const auto& removed = g.edge(skip);
    std::vector<int> dist(g.node_count(), kInf);
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[removed.u] = 0;
    pq.push({0, removed.u});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      for (int e : g.incident(u)) {
        if (e == skip) continue;
        const int w = g.edge(e).other(u);
        const int nd = d + weight(*g.edge(e).label);
        if (nd < dist[w]) {
          dist[w] = nd;
          pq.push({nd, w});
        }
      }
    }
    if (dist[removed.v] != kInf) {
      best = std::min(best, dist[removed.v] + weight(*removed.label));
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

std::vector<int> cycles_per_edge(const LabeledGraph& g, const std::vector<HamCycle>& cycles) {
  std::vector<int> counts(g.edge_count(), 0);
  for (const auto& c : cycles) {
    for (int e : c.edges) ++counts[e];
  }
  return counts;
}

RungReport rung_report(const LabeledGraph& g, const HamCycle& cycle) {
  RungReport r;
  std::vector<char> in_cycle(g.edge_count(), 0);
  for (int e : cycle.edges) in_cycle[e] = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).rung) continue;
    (in_cycle[e] ? r.used : r.omitted).push_back(e);
  }
  auto rim_adjacent = [&](int a, int b) {
    for (int e : g.incident(a)) {
      if (!g.edge(e).rung && g.edge(e).other(a) == b) return true;
    }
    return false;
  };
  r.omitted_consecutive = r.omitted.size() >= 2;
  for (std::size_t i = 0; i < r.omitted.size(); ++i) {
    for (std::size_t j = i + 1; j < r.omitted.size(); ++j) {
      const auto& p = g.edge(r.omitted[i]);
      const auto& q = g.edge(r.omitted[j]);
      const bool joined = (rim_adjacent(p.u, q.u) && rim_adjacent(p.v, q.v)) ||
                          (rim_adjacent(p.u, q.v) && rim_adjacent(p.v, q.u));
      if (!joined) r.omitted_consecutive = false;
    }
  }
  std::vector<std::size_t> rung_positions;
  for (std::size_t i = 0; i < cycle.edges.size(); ++i) {
    if (g.edge(cycle.edges[i]).rung) rung_positions.push_back(i);
  }
  for (std::size_t k = 0; k < rung_positions.size(); ++k) {
    const std::size_t from = rung_positions[k];
    const std::size_t to = rung_positions[(k + 1) % rung_positions.size()];
    const std::size_t n = cycle.edges.size();
    r.segments.push_back(static_cast<int>((to + n - from - 1) % n));
  }
  r.used_at_distance_three =
      !r.segments.empty() &&
      std::all_of(r.segments.begin(), r.segments.end(), [](int s) { return s == 3; });
  return r;
}

}  // namespace hamsurf
