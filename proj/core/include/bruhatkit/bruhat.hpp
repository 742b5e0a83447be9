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

#ifndef BRUHATKIT_BRUHAT_HPP_
#define BRUHATKIT_BRUHAT_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bruhatkit/graph.hpp"
#include "bruhatkit/permutation.hpp"

namespace bruhatkit {

// Thrown when a lower interval grows past the caller's vertex budget.
class IntervalTooLarge : public std::runtime_error {
 public:
  explicit IntervalTooLarge(std::size_t limit);
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct BruhatVertex {
  Permutation label;
  int length;
};

// Edge source -> target with label(target) = transposition * label(source).
struct BruhatEdge {
  int source;
  int target;
  Transposition transposition;

  bool operator==(const BruhatEdge&) const = default;
};

// A Bruhat graph (or an induced piece of one). Vertex ids index `vertices`;
// edges are sorted by (source, target).
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::vector<BruhatVertex> vertices, std::vector<BruhatEdge> edges);

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<BruhatVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<BruhatEdge>& edges() const noexcept { return edges_; }
  const std::vector<int>& out_neighbors(int v) const { return out_.at(v); }
  const std::vector<int>& in_neighbors(int v) const { return in_.at(v); }

  std::optional<int> find(const Permutation& label) const;

  // Vertices with no incoming / outgoing edges.
  std::vector<int> sources() const;
  std::vector<int> sinks() const;

 private:
  std::vector<BruhatVertex> vertices_;
  std::vector<BruhatEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// u <= v in Bruhat order, by rank-matrix dominance. Throws PermutationError
// on size mismatch.
bool bruhat_leq(const Permutation& u, const Permutation& v);

// Breadth-first search for a chain of length-increasing transposition steps
// from u up to v. Exponential; meant as a cross-check for small sizes.
bool bruhat_leq_oracle(const Permutation& u, const Permutation& v);

// {x : x <= sigma}, sorted by (length, word).
std::vector<Permutation> lower_interval(const Permutation& sigma,
                                        std::size_t max_vertices = kUnlimited);

// B(sigma): vertex ids follow lower_interval order, so vertex 0 is the
// identity and the last vertex is sigma.
DirectedGraph bruhat_graph(const Permutation& sigma,
                           std::size_t max_vertices = kUnlimited);

UndirectedGraph underlying_undirected(const DirectedGraph& g);

// Checks that g is the dim-cube by assigning each out-neighbor of the unique
// source a coordinate and mapping every vertex to the coordinates below it.
bool is_hypercube(const DirectedGraph& g, int dim);

// The induced subgraph of B(target) on permutations that agree with target
// away from the embedding positions. Throws PermutationError if `e` is not
// an occurrence of pattern in target.
DirectedGraph induced_pattern_subgraph(const Permutation& pattern,
                                       const Permutation& target,
                                       const Embedding& e);

// Edge counts of the longest path and shortest path from the unique source
// to the unique sink. Throws GraphError unless both are unique.
int longest_source_sink_path(const DirectedGraph& g);
int shortest_source_sink_path(const DirectedGraph& g);

}  // namespace bruhatkit

#endif  // BRUHATKIT_BRUHAT_HPP_
