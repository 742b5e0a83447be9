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

#include "bruhatkit/graph.hpp"

#include <algorithm>
#include <string>

namespace bruhatkit {

UndirectedGraph::UndirectedGraph(int vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(vertex_count));
}

UndirectedGraph UndirectedGraph::complete(int n) {
  UndirectedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

UndirectedGraph UndirectedGraph::complete_bipartite(int a, int b) {
  UndirectedGraph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

UndirectedGraph UndirectedGraph::hypercube(int dim) {
  if (dim < 0 || dim > 20) throw GraphError("hypercube dimension out of range");
  const int n = 1 << dim;
  UndirectedGraph g(n);
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < dim; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

void UndirectedGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
}

bool UndirectedGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return true;
}

bool UndirectedGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& smaller = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(smaller.begin(), smaller.end(), other) != smaller.end();
}

UndirectedGraph UndirectedGraph::without_edge(std::size_t index) const {
  UndirectedGraph g(vertex_count());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i != index) g.add_edge(edges_[i].first, edges_[i].second);
  }
  return g;
}

UndirectedGraph UndirectedGraph::induced(std::span<const int> vertices) const {
  std::vector<int> relabel(adj_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    relabel[vertices[i]] = static_cast<int>(i);
  }
  UndirectedGraph g(static_cast<int>(vertices.size()));
  for (const auto& [u, v] : edges_) {
    if (relabel[u] >= 0 && relabel[v] >= 0) g.add_edge(relabel[u], relabel[v]);
  }
  return g;
}

std::vector<std::vector<int>> UndirectedGraph::connected_components() const {
  std::vector<int> component(adj_.size(), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < vertex_count(); ++start) {
    if (component[start] >= 0) continue;
    auto& members = out.emplace_back();
    std::vector<int> stack{start};
    component[start] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : adj_[v]) {
        if (component[w] < 0) {
          component[w] = component[start];
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return out;
}

}  // namespace bruhatkit
