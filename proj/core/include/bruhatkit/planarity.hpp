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

#ifndef BRUHATKIT_PLANARITY_HPP_
#define BRUHATKIT_PLANARITY_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bruhatkit/graph.hpp"

namespace bruhatkit {

enum class KuratowskiKind { kK5, kK33 };

// A subdivision of K5 or K3,3 inside a graph. For K3,3 the first three
// branch vertices form one side. `paths[i]` runs between the branch vertices
// of the i-th required pair (in the order produced by kuratowski_pairs) and
// includes both endpoints.
struct KuratowskiWitness {
  KuratowskiKind kind;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> paths;
};

struct PlanarityVerdict {
  bool planar = true;
  std::optional<KuratowskiWitness> witness;  // set only when !planar
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index pairs into branch_vertices that must be joined for a witness of the
// given kind.
std::vector<std::pair<int, int>> kuratowski_pairs(KuratowskiKind kind);

// Left-right planarity test, applied to each connected component.
bool is_planar(const UndirectedGraph& g);

// True when E > 3V - 6 (so g is certainly non-planar). Graphs with fewer
// than three vertices are never rejected.
bool euler_edge_reject(const UndirectedGraph& g);

// Exhaustive search for a K5 subdivision, then a K3,3 subdivision. Branch
// vertex sets are tried in lexicographic order and the first witness wins.
// Exponential: throws OracleBudgetExceeded above `max_edges` edges.
PlanarityVerdict kuratowski_oracle(const UndirectedGraph& g,
                                   std::size_t max_edges = 80);

// Structural check of a witness against g: distinct branch vertices, paths
// that follow edges of g, join the required pairs and share no vertices
// other than their own endpoints.
bool is_valid_witness(const UndirectedGraph& g, const KuratowskiWitness& w);

}  // namespace bruhatkit

#endif  // BRUHATKIT_PLANARITY_HPP_
