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

// Exhaustive checks of the structural results about Bruhat graphs, and
// computation of minimal avoidance bases.

#ifndef BRUHATKIT_THEOREMS_HPP_
#define BRUHATKIT_THEOREMS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bruhatkit/graph.hpp"
#include "bruhatkit/permutation.hpp"

namespace bruhatkit {

using PermutationPredicate = std::function<bool(const Permutation&)>;

struct BasisReport {
  std::string property;
  int max_size = 0;
  std::vector<Permutation> basis;  // sorted by (size, word)
  std::int64_t candidates_examined = 0;
};

struct VerificationReport {
  std::string suite;
  int n = 0;      // 0 when the suite has no n parameter
  int max_m = 0;
  std::int64_t checked = 0;
  bool passed = true;
  std::vector<Permutation> counterexamples;  // sorted by (size, word)
  // Failures that have no permutation witness (e.g. a count mismatch).
  std::vector<std::string> mismatches;
};

struct SuiteOptions {
  int threads = 1;
};

// Avoids 321 and has at most three inversions.
bool planar_by_characterization(const Permutation& p);

// Contains 321 or has at least four inversions.
bool planar_basis_bad(const Permutation& p);

// Minimal permutations of size <= max_size satisfying `bad`, which must be
// closed upward under pattern containment.
BasisReport compute_basis(const PermutationPredicate& bad, int max_size,
                          std::string property = "custom");
BasisReport compute_planar_basis(int max_size = 8);
// Basis of the property "length < n"; the default ceiling is 2n.
BasisReport compute_length_basis(int n, std::optional<int> max_size = {});

VerificationReport verify_planar_characterization(int max_m,
                                                  SuiteOptions opts = {});
VerificationReport verify_cube_classification(int max_m, SuiteOptions opts = {});

// Every sigma with length >= n contains a pattern of size <= 2n and length
// >= n, and conversely. With `use_basis`, witnesses are looked up against
// the precomputed basis; otherwise subsequences are scanned directly.
VerificationReport verify_length_basis(int n, int max_m, SuiteOptions opts = {},
                                       bool use_basis = true);

// 2143...(2n)(2n-1) has length n and contains no smaller pattern of length n.
VerificationReport verify_sharpness(int n);

VerificationReport verify_fixed_point_lemma(int n, int max_m,
                                            SuiteOptions opts = {});
VerificationReport verify_cycle_lemma(int max_m, SuiteOptions opts = {});
VerificationReport verify_disjoint_cycles_lemma(int n, int max_m,
                                                SuiteOptions opts = {});
// The three lemmas combined into one report.
VerificationReport verify_lemmas(int n, int max_m, SuiteOptions opts = {});

struct PlanarCount {
  int m;
  int length;
  std::int64_t enumerated;
  std::int64_t formula;
};

// Closed forms for the number of planar-graph permutations of S_m with the
// given length (0..3), evaluated literally.
std::int64_t planar_count_formula(int m, int length);
std::vector<PlanarCount> planar_counts(int max_m, SuiteOptions opts = {});
VerificationReport verify_counts(int max_m, SuiteOptions opts = {});

// bruhat_leq against the BFS oracle on all pairs of S_n.
VerificationReport verify_bruhat_oracle(int n, SuiteOptions opts = {});

struct NamedGraph {
  std::string name;
  UndirectedGraph graph;
};

// Bruhat graphs of S_4, K_n (n <= 6), K_{a,b} (a, b <= 4), Q_n (n <= 4) and
// `random_graphs` seeded random graphs on at most 8 vertices.
std::vector<NamedGraph> planarity_oracle_corpus(int random_graphs = 50,
                                                std::uint32_t seed = 20240611);
// is_planar against kuratowski_oracle on the corpus; disagreements are
// reported by graph name in `mismatches`.
VerificationReport verify_planarity_oracle(int random_graphs = 50,
                                           std::uint32_t seed = 20240611);

}  // namespace bruhatkit

#endif  // BRUHATKIT_THEOREMS_HPP_
