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

#include "bruhatkit/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>
#include <utility>

#include "bruhatkit/bruhat.hpp"
#include "bruhatkit/planarity.hpp"

namespace bruhatkit {

namespace {

const Permutation& pattern_321() {
  static const Permutation p({3, 2, 1});
  return p;
}

// Per-worker tally merged after all workers finish.
struct Tally {
  std::int64_t checked = 0;
  std::vector<Permutation> counterexamples;
};

// Runs visit(sigma, tally) over S_m. Work is split by the first entry of
// the word; each worker owns its tally, so the merged result does not depend
// on scheduling.
template <class Local, class Visit>
std::vector<Local> run_over_sm(int m, int threads, Visit visit) {
  threads = std::clamp(threads, 1, m);
  std::vector<Local> locals(static_cast<std::size_t>(threads));
  auto work = [&](int worker) {
    for (int first = worker + 1; first <= m; first += threads) {
      std::vector<int> word{first};
      for (int v = 1; v <= m; ++v) {
        if (v != first) word.push_back(v);
      }
      do {
        visit(Permutation(Permutation::Unchecked{}, word), locals[worker]);
      } while (std::next_permutation(word.begin() + 1, word.end()));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  return locals;
}

VerificationReport new_report(std::string suite, int n, int max_m) {
  VerificationReport report;
  report.suite = std::move(suite);
  report.n = n;
  report.max_m = max_m;
  return report;
}

void merge_into(VerificationReport& report, std::vector<Tally> tallies) {
  for (auto& t : tallies) {
    report.checked += t.checked;
    for (auto& p : t.counterexamples) report.counterexamples.push_back(std::move(p));
  }
}

void seal(VerificationReport& report) {
  auto& ce = report.counterexamples;
  std::sort(ce.begin(), ce.end());
  ce.erase(std::unique(ce.begin(), ce.end()), ce.end());
  report.passed = ce.empty() && report.mismatches.empty();
}

// Calls visit(positions) for every k-subset of {1..n}, lexicographically,
// until visit returns true. Returns whether it stopped early.
template <class Visit>
bool any_subset(int n, int k, Visit visit) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (visit(std::span<const int>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Some pattern of `sigma` on exactly k positions has length >= bound.
bool has_long_pattern_of_size(const Permutation& sigma, int k, int bound) {
  return any_subset(sigma.size(), k, [&](std::span<const int> positions) {
    return coxeter_length(pattern_at(sigma, positions)) >= bound;
  });
}

bool is_single_cycle(const Permutation& p) {
  return cycle_decomposition(p).size() == 1;
}

}  // namespace

bool planar_by_characterization(const Permutation& p) {
  return coxeter_length(p) <= 3 && !contains_pattern(pattern_321(), p);
}

bool planar_basis_bad(const Permutation& p) {
  return coxeter_length(p) >= 4 || contains_pattern(pattern_321(), p);
}

BasisReport compute_basis(const PermutationPredicate& bad, int max_size,
                          std::string property) {
  BasisReport report;
  report.property = std::move(property);
  report.max_size = max_size;
  for (int size = 1; size <= max_size; ++size) {
    const std::size_t smaller = report.basis.size();
    for_each_permutation(size, [&](const Permutation& sigma) {
      ++report.candidates_examined;
      if (!bad(sigma)) return;
      // Same-size containment is equality, so only smaller elements matter.
      const std::span<const Permutation> earlier(report.basis.data(), smaller);
      if (avoids_all(sigma, earlier)) report.basis.push_back(sigma);
    });
  }
  return report;
}

BasisReport compute_planar_basis(int max_size) {
  return compute_basis(planar_basis_bad, max_size, "planar");
}

BasisReport compute_length_basis(int n, std::optional<int> max_size) {
  return compute_basis(
      [n](const Permutation& p) { return coxeter_length(p) >= n; },
      max_size.value_or(2 * n), "max-length:" + std::to_string(n));
}

VerificationReport verify_planar_characterization(int max_m, SuiteOptions opts) {
  VerificationReport report = new_report("planar-char", 0, max_m);
  for (int m = 1; m <= max_m; ++m) {
    merge_into(report, run_over_sm<Tally>(m, opts.threads,
                                          [](const Permutation& sigma, Tally& t) {
      ++t.checked;
      const bool graph_planar =
          is_planar(underlying_undirected(bruhat_graph(sigma)));
      if (graph_planar != planar_by_characterization(sigma)) {
        t.counterexamples.push_back(sigma);
      }
    }));
  }
  seal(report);
  return report;
}

VerificationReport verify_cube_classification(int max_m, SuiteOptions opts) {
  VerificationReport report = new_report("cube-class", 0, max_m);
  for (int m = 1; m <= max_m; ++m) {
    merge_into(report, run_over_sm<Tally>(m, opts.threads,
                                          [](const Permutation& sigma, Tally& t) {
      ++t.checked;
      const DirectedGraph g = bruhat_graph(sigma);
      if (!is_planar(underlying_undirected(g))) return;
      const int length = coxeter_length(sigma);
      if (length > 3 || !is_hypercube(g, length)) {
        t.counterexamples.push_back(sigma);
      }
    }));
  }
  seal(report);
  return report;
}

VerificationReport verify_length_basis(int n, int max_m, SuiteOptions opts,
                                       bool use_basis) {
  VerificationReport report = new_report("length-basis", n, max_m);
  std::vector<Permutation> basis;
  if (use_basis) basis = compute_length_basis(n).basis;

  auto has_witness = [&](const Permutation& sigma) {
    if (use_basis) return !avoids_all(sigma, basis);
    for (int k = 1; k <= std::min(2 * n, sigma.size()); ++k) {
      if (has_long_pattern_of_size(sigma, k, n)) return true;
    }
    return false;
  };
  for (int m = 1; m <= max_m; ++m) {
    merge_into(report, run_over_sm<Tally>(m, opts.threads,
                                          [&](const Permutation& sigma, Tally& t) {
      ++t.checked;
      if ((coxeter_length(sigma) >= n) != has_witness(sigma)) {
        t.counterexamples.push_back(sigma);
      }
    }));
  }
  seal(report);
  return report;
}

VerificationReport verify_sharpness(int n) {
  VerificationReport report = new_report("sharpness", n, 2 * n);
  const Permutation sigma = Permutation::adjacent_involution(n);
  if (coxeter_length(sigma) != n) report.counterexamples.push_back(sigma);
  for (int k = 1; k < sigma.size(); ++k) {
    any_subset(sigma.size(), k, [&](std::span<const int> positions) {
      ++report.checked;
      Permutation tau = pattern_at(sigma, positions);
      if (coxeter_length(tau) >= n) report.counterexamples.push_back(std::move(tau));
      return false;
    });
  }
  seal(report);
  return report;
}

VerificationReport verify_fixed_point_lemma(int n, int max_m, SuiteOptions opts) {
  VerificationReport report = new_report("fixed-point-lemma", n, max_m);
  for (int m = 2 * n + 1; m <= max_m; ++m) {
    merge_into(report, run_over_sm<Tally>(m, opts.threads,
                                          [&](const Permutation& sigma, Tally& t) {
      if (fixed_point_count(sigma) == 0) return;
      ++t.checked;
      // Strict patterns of maximal size are single deletions; length is
      // monotone under containment, so they are enough.
      const bool strict_witness = has_long_pattern_of_size(sigma, m - 1, n);
      if ((coxeter_length(sigma) >= n) != strict_witness) {
        t.counterexamples.push_back(sigma);
      }
    }));
  }
  seal(report);
  return report;
}

VerificationReport verify_cycle_lemma(int max_m, SuiteOptions opts) {
  VerificationReport report = new_report("cycle-lemma", 0, max_m);
  for (int m = 2; m <= max_m; ++m) {
    merge_into(report, run_over_sm<Tally>(m, opts.threads,
                                          [&](const Permutation& sigma, Tally& t) {
      if (!is_single_cycle(sigma)) return;
      ++t.checked;
      if (!has_long_pattern_of_size(sigma, m - 1, m - 2)) {
        t.counterexamples.push_back(sigma);
      }
    }));
  }
  seal(report);
  return report;
}

VerificationReport verify_disjoint_cycles_lemma(int n, int max_m,
                                                SuiteOptions opts) {
  VerificationReport report = new_report("disjoint-cycles-lemma", n, max_m);
  for (int m = 2 * n + 1; m <= max_m; ++m) {
    merge_into(report, run_over_sm<Tally>(m, opts.threads,
                                          [&](const Permutation& sigma, Tally& t) {
      if (fixed_point_count(sigma) != 0 || is_single_cycle(sigma)) return;
      ++t.checked;
      if (!has_long_pattern_of_size(sigma, m - 2, n)) {
        t.counterexamples.push_back(sigma);
      }
    }));
  }
  seal(report);
  return report;
}

VerificationReport verify_lemmas(int n, int max_m, SuiteOptions opts) {
  VerificationReport report = new_report("lemmas", n, max_m);
  for (const auto& part : {verify_fixed_point_lemma(n, max_m, opts),
                           verify_cycle_lemma(max_m, opts),
                           verify_disjoint_cycles_lemma(n, max_m, opts)}) {
    report.checked += part.checked;
    report.counterexamples.insert(report.counterexamples.end(),
                                  part.counterexamples.begin(),
                                  part.counterexamples.end());
  }
  seal(report);
  return report;
}

std::int64_t planar_count_formula(int m, int length) {
  const std::int64_t x = m;
  switch (length) {
    case 0: return 1;
    case 1: return x - 1;
    case 2: return (x + 1) * (x - 2) / 2;
    case 3: return (x + 4) * (x - 1) * (x - 3) / 6;
    default: return 0;
  }
}

std::vector<PlanarCount> planar_counts(int max_m, SuiteOptions opts) {
  std::vector<PlanarCount> out;
  for (int m = 1; m <= max_m; ++m) {
    struct ByLength {
      std::int64_t count[4] = {0, 0, 0, 0};
    };
    std::int64_t total[4] = {0, 0, 0, 0};
    for (const auto& local : run_over_sm<ByLength>(
             m, opts.threads, [](const Permutation& sigma, ByLength& acc) {
               if (planar_by_characterization(sigma)) {
                 ++acc.count[coxeter_length(sigma)];
               }
             })) {
      for (int l = 0; l < 4; ++l) total[l] += local.count[l];
    }
    for (int l = 0; l < 4; ++l) {
      out.push_back({m, l, total[l], planar_count_formula(m, l)});
    }
  }
  return out;
}

VerificationReport verify_counts(int max_m, SuiteOptions opts) {
  VerificationReport report = new_report("counts", 0, max_m);
  for (const auto& c : planar_counts(max_m, opts)) {
    ++report.checked;
    if (c.enumerated != c.formula) {
      report.mismatches.push_back(
          "m=" + std::to_string(c.m) + " length=" + std::to_string(c.length) +
          ": enumerated " + std::to_string(c.enumerated) + ", formula " +
          std::to_string(c.formula));
    }
  }
  seal(report);
  return report;
}

VerificationReport verify_bruhat_oracle(int n, SuiteOptions opts) {
  VerificationReport report = new_report("bruhat-oracle", n, n);
  const std::vector<Permutation> group = all_permutations(n);
  merge_into(report, run_over_sm<Tally>(n, opts.threads,
                                        [&](const Permutation& u, Tally& t) {
    for (const Permutation& v : group) {
      ++t.checked;
      if (bruhat_leq(u, v) != bruhat_leq_oracle(u, v)) {
        t.counterexamples.push_back(u);
        t.counterexamples.push_back(v);
      }
    }
  }));
  seal(report);
  return report;
}

std::vector<NamedGraph> planarity_oracle_corpus(int random_graphs,
                                                std::uint32_t seed) {
  std::vector<NamedGraph> corpus;
  for_each_permutation(4, [&](const Permutation& sigma) {
    corpus.push_back({"B(" + sigma.to_string() + ")",
                      underlying_undirected(bruhat_graph(sigma))});
  });
  for (int n = 1; n <= 6; ++n) {
    corpus.push_back({"K" + std::to_string(n), UndirectedGraph::complete(n)});
  }
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      corpus.push_back({"K" + std::to_string(a) + "," + std::to_string(b),
                        UndirectedGraph::complete_bipartite(a, b)});
    }
  }
  for (int d = 0; d <= 4; ++d) {
    corpus.push_back({"Q" + std::to_string(d), UndirectedGraph::hypercube(d)});
  }
  // Raw engine output only, so the corpus is identical across standard
  // libraries.
  std::mt19937 rng(seed);
  for (int i = 0; i < random_graphs; ++i) {
    const int vertices = 5 + static_cast<int>(rng() % 4);   // 5..8
    const std::uint32_t percent = 30 + rng() % 51;           // 30..80
    UndirectedGraph g(vertices);
    for (int u = 0; u < vertices; ++u) {
      for (int v = u + 1; v < vertices; ++v) {
        if (rng() % 100 < percent) g.add_edge(u, v);
      }
    }
    corpus.push_back({"random#" + std::to_string(i), std::move(g)});
  }
  return corpus;
}

VerificationReport verify_planarity_oracle(int random_graphs, std::uint32_t seed) {
  VerificationReport report = new_report("planarity-oracle", 0, 0);
  for (const auto& [name, graph] : planarity_oracle_corpus(random_graphs, seed)) {
    ++report.checked;
    const PlanarityVerdict verdict = kuratowski_oracle(graph);
    const bool witness_ok =
        verdict.planar || (verdict.witness && is_valid_witness(graph, *verdict.witness));
    if (verdict.planar != is_planar(graph) || !witness_ok) {
      report.mismatches.push_back(name);
    }
  }
  seal(report);
  return report;
}

}  // namespace bruhatkit
