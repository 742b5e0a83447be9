// Copyright 2026 The bruhatkit Authors.
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

#include "bruhatkit/planarity.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>
#include <string>

namespace bruhatkit {

namespace {

// Left-right planarity criterion (de Fraysseix, Ossona de Mendez and
// Rosenstiehl, in the formulation of Brandes). Phase one orients the graph
// along a DFS and computes lowpoints; phase two walks the DFS again in
// nesting order and maintains a stack of conflict pairs of return-edge
// intervals. The graph is planar iff no conflict pair is forced to put
// intersecting intervals on the same side.
class LeftRightTest {
 public:
  explicit LeftRightTest(const UndirectedGraph& g)
      : g_(g),
        height_(g.vertex_count(), -1),
        parent_edge_(g.vertex_count(), kNone),
        out_edges_(g.vertex_count()),
        oriented_(g.edge_count(), false) {
    const int m = g.edge_count();
    src_.reserve(m);
    dst_.reserve(m);
    lowpt_.reserve(m);
    lowpt2_.reserve(m);
    nesting_depth_.reserve(m);
    incident_.resize(g.vertex_count());
    const auto edges = g.edges();
    for (int i = 0; i < m; ++i) {
      incident_[edges[i].first].push_back(i);
      incident_[edges[i].second].push_back(i);
    }
  }

  bool run() {
    const int n = g_.vertex_count();
    if (n > 2 && g_.edge_count() > 3 * n - 6) return false;
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
      if (height_[v] != kNone) continue;
      height_[v] = 0;
      roots.push_back(v);
      orient(v);
    }
    for (auto& out : out_edges_) {
      std::stable_sort(out.begin(), out.end(), [&](int x, int y) {
        return nesting_depth_[x] < nesting_depth_[y];
      });
    }
    const std::size_t m = src_.size();
    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, 0);
    for (int root : roots) {
      if (!test(root)) return false;
    }
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };

  struct ConflictPair {
    Interval left;
    Interval right;
    void swap() { std::swap(left, right); }
  };

  bool conflicting(const Interval& i, int edge) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[edge];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty() && p.right.empty()) return INT_MAX;
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void set_ref(int edge, int value) {
    if (edge != kNone) ref_[edge] = value;
  }

  void orient(int v) {
    const int e = parent_edge_[v];
    for (int undirected : incident_[v]) {
      if (oriented_[undirected]) continue;
      oriented_[undirected] = true;
      const auto [a, b] = g_.edges()[undirected];
      const int w = a == v ? b : a;
      const int vw = static_cast<int>(src_.size());
      src_.push_back(v);
      dst_.push_back(w);
      lowpt_.push_back(height_[v]);
      lowpt2_.push_back(height_[v]);
      nesting_depth_.push_back(0);
      out_edges_[v].push_back(vw);
      if (height_[w] == kNone) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_depth_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) ++nesting_depth_[vw];  // chordal
      if (e == kNone) continue;
      if (lowpt_[vw] < lowpt_[e]) {
        lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
        lowpt_[e] = lowpt_[vw];
      } else if (lowpt_[vw] > lowpt_[e]) {
        lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
      } else {
        lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
      }
    }
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    const auto& out = out_edges_[v];
    for (std::size_t i = 0; i < out.size(); ++i) {
      const int ei = out[i];
      const int w = dst_[ei];
      stack_bottom_[ei] = stack_.size();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_.push_back({Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {
        if (i == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // Return edges of ei all go to the right side of p.
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          set_ref(p.right.low, q.right.high);
        }
        p.right.low = q.right.low;
      } else {
        set_ref(q.right.low, lowpt_edge_[e]);
      }
    } while (stack_.size() != stack_bottom_[ei]);

    // Conflicting return edges of earlier siblings go to the left side.
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                               conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        set_ref(p.left.low, q.left.high);
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      stack_.pop_back();
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && dst_[p.left.high] == u) {
        p.left.high = ref_[p.left.high];
      }
      if (p.left.high == kNone && p.left.low != kNone) {
        set_ref(p.left.low, p.right.low);
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) {
        p.right.high = ref_[p.right.high];
      }
      if (p.right.high == kNone && p.right.low != kNone) {
        set_ref(p.right.low, p.left.low);
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) {
        ref_[e] = hl;
      } else {
        ref_[e] = hr;
      }
    }
  }

  const UndirectedGraph& g_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<bool> oriented_;

  // Indexed by oriented edge id.
  std::vector<int> src_;
  std::vector<int> dst_;
  std::vector<int> lowpt_;
  std::vector<int> lowpt2_;
  std::vector<int> nesting_depth_;
  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;

  std::vector<ConflictPair> stack_;
};

// Backtracking router for one choice of branch vertices.
class SubdivisionRouter {
 public:
  SubdivisionRouter(const UndirectedGraph& g, std::vector<int> branch,
                    std::vector<std::pair<int, int>> pairs)
      : g_(g),
        branch_(std::move(branch)),
        pairs_(std::move(pairs)),
        blocked_(g.vertex_count(), false),
        mark_(g.vertex_count(), 0) {
    for (int b : branch_) blocked_[b] = true;
  }

  std::optional<std::vector<std::vector<int>>> route() {
    paths_.clear();
    if (route_from(0)) return paths_;
    return std::nullopt;
  }

 private:
  // Cheap necessary conditions for the pairs still to be routed.
  bool feasible(std::size_t k) {
    std::vector<int> demand(branch_.size(), 0);
    for (std::size_t i = k; i < pairs_.size(); ++i) {
      ++demand[pairs_[i].first];
      ++demand[pairs_[i].second];
    }
    for (std::size_t i = 0; i < branch_.size(); ++i) {
      if (demand[i] == 0) continue;
      int supply = 0;
      for (int w : g_.neighbors(branch_[i])) {
        if (!blocked_[w]) ++supply;
      }
      for (std::size_t j = k; j < pairs_.size(); ++j) {
        const auto [x, y] = pairs_[j];
        if ((x == static_cast<int>(i) && g_.has_edge(branch_[i], branch_[y])) ||
            (y == static_cast<int>(i) && g_.has_edge(branch_[i], branch_[x]))) {
          ++supply;
        }
      }
      if (supply < demand[i]) return false;
    }
    for (std::size_t i = k; i < pairs_.size(); ++i) {
      if (!reachable(branch_[pairs_[i].first], branch_[pairs_[i].second])) {
        return false;
      }
    }
    return true;
  }

  bool reachable(int from, int to) {
    ++stamp_;
    std::vector<int> stack{from};
    mark_[from] = stamp_;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g_.neighbors(v)) {
        if (w == to) return true;
        if (blocked_[w] || mark_[w] == stamp_) continue;
        mark_[w] = stamp_;
        stack.push_back(w);
      }
    }
    return false;
  }

  bool route_from(std::size_t k) {
    if (k == pairs_.size()) return true;
    if (!feasible(k)) return false;
    const int from = branch_[pairs_[k].first];
    const int to = branch_[pairs_[k].second];
    std::vector<int> path{from};
    return walk(k, path, to);
  }

  bool walk(std::size_t k, std::vector<int>& path, int to) {
    const int v = path.back();
    for (int w : g_.neighbors(v)) {
      if (w == to) {
        path.push_back(w);
        paths_.push_back(path);
        if (route_from(k + 1)) return true;
        paths_.pop_back();
        path.pop_back();
        continue;
      }
      if (blocked_[w]) continue;
      blocked_[w] = true;
      path.push_back(w);
      if (walk(k, path, to)) return true;
      path.pop_back();
      blocked_[w] = false;
    }
    return false;
  }

  const UndirectedGraph& g_;
  std::vector<int> branch_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<bool> blocked_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<std::vector<int>> paths_;
};

// Calls visit(subset) for each k-subset of `items` in lexicographic order
// until visit returns true.
bool for_each_subset(const std::vector<int>& items, int k,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(items.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (visit(subset)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> vertices_with_degree_at_least(const UndirectedGraph& g, int d) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= d) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> kuratowski_pairs(KuratowskiKind kind) {
  std::vector<std::pair<int, int>> pairs;
  if (kind == KuratowskiKind::kK5) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    }
  } else {
    for (int i = 0; i < 3; ++i) {
      for (int j = 3; j < 6; ++j) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

bool euler_edge_reject(const UndirectedGraph& g) {
  const long v = g.vertex_count();
  return v >= 3 && g.edge_count() > 3 * v - 6;
}

bool is_planar(const UndirectedGraph& g) {
  for (const auto& component : g.connected_components()) {
    if (component.size() < 5) continue;  // every graph on <= 4 vertices is planar
    const UndirectedGraph piece = g.induced(component);
    if (euler_edge_reject(piece)) return false;
    if (!LeftRightTest(piece).run()) return false;
  }
  return true;
}

PlanarityVerdict kuratowski_oracle(const UndirectedGraph& g,
                                   std::size_t max_edges) {
  if (static_cast<std::size_t>(g.edge_count()) > max_edges) {
    throw OracleBudgetExceeded("graph has " + std::to_string(g.edge_count()) +
                               " edges; oracle budget is " +
                               std::to_string(max_edges));
  }
  PlanarityVerdict verdict;

  const auto k5_pairs = kuratowski_pairs(KuratowskiKind::kK5);
  for_each_subset(vertices_with_degree_at_least(g, 4), 5,
                  [&](const std::vector<int>& branch) {
                    auto paths = SubdivisionRouter(g, branch, k5_pairs).route();
                    if (!paths) return false;
                    verdict.planar = false;
                    verdict.witness = KuratowskiWitness{KuratowskiKind::kK5,
                                                        branch, std::move(*paths)};
                    return true;
                  });
  if (!verdict.planar) return verdict;

  const auto k33_pairs = kuratowski_pairs(KuratowskiKind::kK33);
  for_each_subset(
      vertices_with_degree_at_least(g, 3), 6, [&](const std::vector<int>& six) {
        // Sides {six[0], six[i], six[j]} and the remaining three.
        for (int i = 1; i < 6; ++i) {
          for (int j = i + 1; j < 6; ++j) {
            std::vector<int> branch{six[0], six[i], six[j]};
            for (int x = 1; x < 6; ++x) {
              if (x != i && x != j) branch.push_back(six[x]);
            }
            auto paths = SubdivisionRouter(g, branch, k33_pairs).route();
            if (!paths) continue;
            verdict.planar = false;
            verdict.witness = KuratowskiWitness{KuratowskiKind::kK33, branch,
                                                std::move(*paths)};
            return true;
          }
        }
        return false;
      });
  return verdict;
}

bool is_valid_witness(const UndirectedGraph& g, const KuratowskiWitness& w) {
  const auto pairs = kuratowski_pairs(w.kind);
  const std::size_t branch_count = w.kind == KuratowskiKind::kK5 ? 5 : 6;
  if (w.branch_vertices.size() != branch_count || w.paths.size() != pairs.size()) {
    return false;
  }
  std::set<int> used(w.branch_vertices.begin(), w.branch_vertices.end());
  if (used.size() != branch_count) return false;
  for (int b : w.branch_vertices) {
    if (b < 0 || b >= g.vertex_count()) return false;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& path = w.paths[i];
    if (path.size() < 2) return false;
    if (path.front() != w.branch_vertices[pairs[i].first] ||
        path.back() != w.branch_vertices[pairs[i].second]) {
      return false;
    }
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      if (path[j + 1] < 0 || path[j + 1] >= g.vertex_count()) return false;
      if (!g.has_edge(path[j], path[j + 1])) return false;
    }
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      if (!used.insert(path[j]).second) return false;
    }
  }
  return true;
}

}  // namespace bruhatkit
