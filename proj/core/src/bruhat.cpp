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

#include "bruhatkit/bruhat.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace bruhatkit {

namespace {

void require_same_size(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw PermutationError("Bruhat comparison needs equal sizes, got " +
                           std::to_string(u.size()) + " and " +
                           std::to_string(v.size()));
  }
}

Permutation swap_positions(const Permutation& p, std::size_t i, std::size_t j) {
  std::vector<int> word(p.word().begin(), p.word().end());
  std::swap(word[i], word[j]);
  return Permutation(Permutation::Unchecked{}, std::move(word));
}

struct RankedLess {
  bool operator()(const BruhatVertex& x, const BruhatVertex& y) const {
    if (x.length != y.length) return x.length < y.length;
    return x.label < y.label;
  }
};

std::vector<int> topological_order(const DirectedGraph& g) {
  std::vector<int> indegree(g.vertex_count(), 0);
  for (const auto& e : g.edges()) ++indegree[e.target];
  std::vector<int> order;
  order.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : g.out_neighbors(order[head])) {
      if (--indegree[w] == 0) order.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != g.vertex_count()) {
    throw GraphError("graph has a directed cycle");
  }
  return order;
}

std::pair<int, int> unique_source_and_sink(const DirectedGraph& g) {
  const auto sources = g.sources();
  const auto sinks = g.sinks();
  if (sources.size() != 1 || sinks.size() != 1) {
    throw GraphError("expected a unique source and a unique sink");
  }
  return {sources.front(), sinks.front()};
}

}  // namespace

IntervalTooLarge::IntervalTooLarge(std::size_t limit)
    : std::runtime_error("lower interval exceeds " + std::to_string(limit) +
                         " vertices"),
      limit_(limit) {}

DirectedGraph::DirectedGraph(std::vector<BruhatVertex> vertices,
                             std::vector<BruhatEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(),
            [](const BruhatEdge& x, const BruhatEdge& y) {
              return std::pair(x.source, x.target) < std::pair(y.source, y.target);
            });
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (const auto& e : edges_) {
    if (e.source < 0 || e.target < 0 || e.source >= vertex_count() ||
        e.target >= vertex_count()) {
      throw GraphError("edge endpoint out of range");
    }
    out_[e.source].push_back(e.target);
    in_[e.target].push_back(e.source);
  }
}

std::optional<int> DirectedGraph::find(const Permutation& label) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v].label == label) return v;
  }
  return std::nullopt;
}

std::vector<int> DirectedGraph::sources() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (in_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<int> DirectedGraph::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (out_[v].empty()) out.push_back(v);
  }
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  require_same_size(u, v);
  const int n = u.size();
  // above_u[j] = |{a <= i : u(a) >= j}| for the current prefix length i.
  std::vector<int> above_u(n + 2, 0);
  std::vector<int> above_v(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= u.at(i); ++j) ++above_u[j];
    for (int j = 1; j <= v.at(i); ++j) ++above_v[j];
    for (int j = 1; j <= n; ++j) {
      if (above_u[j] > above_v[j]) return false;
    }
  }
  return true;
}

bool bruhat_leq_oracle(const Permutation& u, const Permutation& v) {
  require_same_size(u, v);
  const int target_length = coxeter_length(v);
  std::unordered_set<Permutation, PermutationHash> seen{u};
  std::deque<Permutation> queue{u};
  while (!queue.empty()) {
    const Permutation x = std::move(queue.front());
    queue.pop_front();
    if (x == v) return true;
    const int x_length = coxeter_length(x);
    for (int a = 1; a <= x.size(); ++a) {
      for (int b = a + 1; b <= x.size(); ++b) {
        Permutation y = apply_transposition(Transposition(a, b), x);
        const int y_length = coxeter_length(y);
        if (y_length <= x_length || y_length > target_length) continue;
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
  }
  return false;
}

namespace {

std::vector<BruhatVertex> ranked_interval(const Permutation& sigma,
                                          std::size_t max_vertices) {
  std::unordered_set<Permutation, PermutationHash> seen{sigma};
  std::vector<Permutation> frontier{sigma};
  const std::size_t n = static_cast<std::size_t>(sigma.size());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      const auto w = x.word();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (w[i] < w[j]) continue;  // swapping would go up
          Permutation y = swap_positions(x, i, j);
          if (!seen.insert(y).second) continue;
          if (seen.size() > max_vertices) throw IntervalTooLarge(max_vertices);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<BruhatVertex> ranked;
  ranked.reserve(seen.size());
  for (const Permutation& p : seen) ranked.push_back({p, coxeter_length(p)});
  std::sort(ranked.begin(), ranked.end(), RankedLess{});
  return ranked;
}

}  // namespace

std::vector<Permutation> lower_interval(const Permutation& sigma,
                                        std::size_t max_vertices) {
  std::vector<Permutation> out;
  for (auto& v : ranked_interval(sigma, max_vertices)) {
    out.push_back(std::move(v.label));
  }
  return out;
}

DirectedGraph bruhat_graph(const Permutation& sigma, std::size_t max_vertices) {
  std::vector<BruhatVertex> vertices = ranked_interval(sigma, max_vertices);
  std::unordered_map<Permutation, int, PermutationHash> id_of;
  id_of.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    id_of.emplace(vertices[i].label, static_cast<int>(i));
  }
  const std::size_t n = static_cast<std::size_t>(sigma.size());
  std::vector<BruhatEdge> edges;
  for (std::size_t id = 0; id < vertices.size(); ++id) {
    const Permutation& x = vertices[id].label;
    const auto w = x.word();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (w[i] > w[j]) continue;  // swapping would go down
        const auto it = id_of.find(swap_positions(x, i, j));
        if (it == id_of.end()) continue;
        edges.push_back({static_cast<int>(id), it->second,
                         Transposition(w[i], w[j])});
      }
    }
  }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

UndirectedGraph underlying_undirected(const DirectedGraph& g) {
  UndirectedGraph out(g.vertex_count());
  for (const auto& e : g.edges()) out.add_edge(e.source, e.target);
  return out;
}

bool is_hypercube(const DirectedGraph& g, int dim) {
  if (dim < 0 || dim > 30) return false;
  const std::size_t expected_vertices = std::size_t{1} << dim;
  if (static_cast<std::size_t>(g.vertex_count()) != expected_vertices) {
    return false;
  }
  const auto sources = g.sources();
  if (sources.size() != 1) return false;
  const auto& coordinates = g.out_neighbors(sources.front());
  if (static_cast<int>(coordinates.size()) != dim) return false;

  std::vector<std::uint32_t> mask(g.vertex_count(), 0);
  std::vector<bool> used(expected_vertices, false);
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int c = 0; c < dim; ++c) {
      if (bruhat_leq(g.vertices()[coordinates[c]].label, g.vertices()[v].label)) {
        mask[v] |= std::uint32_t{1} << c;
      }
    }
    if (used[mask[v]]) return false;
    used[mask[v]] = true;
  }
  // A bijection onto subsets is established; adjacency must be exactly the
  // one-element symmetric differences.
  const UndirectedGraph simple = underlying_undirected(g);
  const std::size_t cube_edges =
      dim == 0 ? 0 : static_cast<std::size_t>(dim) * (expected_vertices / 2);
  if (static_cast<std::size_t>(simple.edge_count()) != cube_edges) return false;
  for (const auto& [u, v] : simple.edges()) {
    const std::uint32_t diff = mask[u] ^ mask[v];
    if (diff == 0 || (diff & (diff - 1)) != 0) return false;
  }
  return true;
}

DirectedGraph induced_pattern_subgraph(const Permutation& pattern,
                                       const Permutation& target,
                                       const Embedding& e) {
  const auto& idx = e.indices;
  if (static_cast<int>(idx.size()) != pattern.size()) {
    throw PermutationError("embedding length does not match pattern size");
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > target.size() || (i > 0 && idx[i - 1] >= idx[i])) {
      throw PermutationError("embedding indices must be strictly increasing "
                             "positions of the target");
    }
  }
  if (pattern_at(target, idx) != pattern) {
    throw PermutationError("embedding is not an occurrence of the pattern");
  }

  std::vector<bool> free_position(target.size() + 1, false);
  for (int i : idx) free_position[i] = true;

  const DirectedGraph full = bruhat_graph(target);
  std::vector<int> relabel(full.vertex_count(), -1);
  std::vector<BruhatVertex> vertices;
  for (int v = 0; v < full.vertex_count(); ++v) {
    const Permutation& x = full.vertices()[v].label;
    bool agrees = true;
    for (int pos = 1; pos <= target.size() && agrees; ++pos) {
      agrees = free_position[pos] || x.at(pos) == target.at(pos);
    }
    if (!agrees) continue;
    relabel[v] = static_cast<int>(vertices.size());
    vertices.push_back(full.vertices()[v]);
  }
  std::vector<BruhatEdge> edges;
  for (const auto& edge : full.edges()) {
    if (relabel[edge.source] >= 0 && relabel[edge.target] >= 0) {
      edges.push_back({relabel[edge.source], relabel[edge.target],
                       edge.transposition});
    }
  }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

int longest_source_sink_path(const DirectedGraph& g) {
  const auto [source, sink] = unique_source_and_sink(g);
  std::vector<int> best(g.vertex_count(), -1);
  best[source] = 0;
  for (int v : topological_order(g)) {
    if (best[v] < 0) continue;
    for (int w : g.out_neighbors(v)) best[w] = std::max(best[w], best[v] + 1);
  }
  return best[sink];
}

int shortest_source_sink_path(const DirectedGraph& g) {
  const auto [source, sink] = unique_source_and_sink(g);
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.out_neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist[sink];
}

}  // namespace bruhatkit
