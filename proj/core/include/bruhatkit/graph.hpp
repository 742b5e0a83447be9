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

#ifndef BRUHATKIT_GRAPH_HPP_
#define BRUHATKIT_GRAPH_HPP_

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bruhatkit {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1.
class UndirectedGraph {
 public:
  using Edge = std::pair<int, int>;  // first < second

  UndirectedGraph() = default;
  explicit UndirectedGraph(int vertex_count);

  static UndirectedGraph complete(int n);
  static UndirectedGraph complete_bipartite(int a, int b);
  // Vertices are bit masks of `dim` coordinates.
  static UndirectedGraph hypercube(int dim);

  // Returns false if the edge was already present. Loops and out-of-range
  // endpoints throw GraphError.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  std::span<const int> neighbors(int v) const { return adj_.at(v); }
  // Edges in insertion order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Copy with edge `index` (into edges()) removed.
  UndirectedGraph without_edge(std::size_t index) const;
  // Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
  UndirectedGraph induced(std::span<const int> vertices) const;

  // Vertex sets of the connected components, each sorted ascending.
  std::vector<std::vector<int>> connected_components() const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace bruhatkit

#endif  // BRUHATKIT_GRAPH_HPP_
