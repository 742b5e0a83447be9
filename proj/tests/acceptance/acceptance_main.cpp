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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bruhatkit/bruhat.hpp"
#include "bruhatkit/planarity.hpp"
#include "bruhatkit/theorems.hpp"
#include "commands.hpp"
#include "test_oracles.hpp"

namespace {

using namespace bruhatkit;

// Every criterion is an exact comparison.
constexpr std::int64_t kCountTolerance = 0;
constexpr std::int64_t kAllowedCounterexamples = 0;

// Wall-clock ceilings in seconds.
constexpr double kBasisBudget = 120;
constexpr double kCharacterizationBudget = 300;
constexpr double kLengthBudget = 120;
constexpr double kOracleBudget = 180;
constexpr double kDefaultBudget = 300;

// Reference planar basis, in the order it was given.
const std::vector<std::string> kReferencePlanarBasis = {
    "321",     "3412",    "23451",   "23514",   "24153",   "25134",
    "31425",   "31524",   "41253",   "51234",   "234165",  "231564",
    "231645",  "241365",  "214563",  "214635",  "215364",  "216345",
    "314265",  "312564",  "312645",  "412365",  "2315476", "2143675",
    "2143756", "2145376", "2153476", "3125476", "21436587"};

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string note) {
    if (!ok) {
      passed = false;
      notes.push_back(std::move(note));
    }
  }
  void report(const VerificationReport& r) {
    const bool ok = r.passed &&
                    static_cast<std::int64_t>(r.counterexamples.size()) <=
                        kAllowedCounterexamples &&
                    r.mismatches.empty();
    std::string note = r.suite + " n=" + std::to_string(r.n) +
                       " max_m=" + std::to_string(r.max_m) +
                       " checked=" + std::to_string(r.checked);
    if (ok) return;
    for (const auto& p : r.counterexamples) note += " counterexample=" + p.to_string();
    for (const auto& m : r.mismatches) note += " [" + m + "]";
    require(false, note);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  body(outcome);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  outcome.require(seconds <= budget, "runtime " + std::to_string(seconds) +
                                         "s exceeds " + std::to_string(budget) + "s");
  std::cout << (outcome.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << title
            << " (" << seconds << "s)\n";
  for (const auto& note : outcome.notes) std::cout << "    " << note << "\n";
  if (!outcome.passed) ++failures;
}

bool size_lex_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

void basis_reproduction(Outcome& o) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"basis", "planar", "8"}, out, err);
  o.require(code == 0, "basis command exited with " + std::to_string(code));

  std::vector<std::string> expected = kReferencePlanarBasis;
  std::sort(expected.begin(), expected.end(), size_lex_less);
  std::string expected_text;
  for (const auto& w : expected) expected_text += w + "\n";
  o.require(out.str() == expected_text, "output differs from the reference list");

  std::vector<std::string> produced;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) produced.push_back(line);
  o.require(produced.size() == expected.size(),
            "produced " + std::to_string(produced.size()) + " lines, expected " +
                std::to_string(expected.size()));
  for (const auto& w : expected)
    if (std::find(produced.begin(), produced.end(), w) == produced.end())
      o.require(false, "expected but not produced: " + w);
  for (const auto& w : produced)
    if (std::find(expected.begin(), expected.end(), w) == expected.end())
      o.require(false, "produced but not expected: " + w);
}

void length_bound(Outcome& o) {
  for (int n = 1; n <= 3; ++n) o.report(verify_length_basis(n, 7));
  for (int n = 1; n <= 4; ++n) o.report(verify_sharpness(n));
}

void counting(Outcome& o) {
  for (const auto& c : planar_counts(9)) {
    const std::int64_t diff = c.enumerated - c.formula;
    o.require(diff <= kCountTolerance && -diff <= kCountTolerance,
              "m=" + std::to_string(c.m) + " length=" + std::to_string(c.length) +
                  " enumerated=" + std::to_string(c.enumerated) +
                  " formula=" + std::to_string(c.formula));
  }
}

void oracle_equivalence(Outcome& o) {
  const auto leq = verify_bruhat_oracle(5);
  o.report(leq);
  o.require(leq.checked == 120 * 120, "expected all 14400 pairs of S_5");
  const auto planar = verify_planarity_oracle(50);
  o.report(planar);
  o.require(planar.checked == static_cast<std::int64_t>(planarity_oracle_corpus(50).size()),
            "planarity corpus not fully checked");
}

void structural_invariants(Outcome& o) {
  for (const auto& sigma : all_permutations(4)) {
    const DirectedGraph g = bruhat_graph(sigma);
    o.require(longest_source_sink_path(g) == coxeter_length(sigma),
              "longest path != length for " + sigma.to_string());
    o.require(shortest_source_sink_path(g) == absolute_length(sigma),
              "shortest path != absolute length for " + sigma.to_string());
  }
  std::int64_t pairs = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& tau : all_permutations(n))
      for (int k = 1; k <= n; ++k)
        for (const auto& pi : all_permutations(k))
          for (const auto& e : embeddings(pi, tau)) {
            ++pairs;
            if (!testing::induced_subgraph_matches_pattern_graph(pi, tau, e))
              o.require(false, "induced subgraph mismatch: " + pi.to_string() + " in " +
                                   tau.to_string());
          }
  o.require(pairs > 0, "no containment pairs enumerated");
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);

  criterion(1, "planar basis up to size 8 equals the reference list", kBasisBudget,
            basis_reproduction);
  criterion(2, "planarity characterization for m <= 6", kCharacterizationBudget,
            [](Outcome& o) {
              const auto r = verify_planar_characterization(6);
              o.report(r);
              o.require(r.checked == 873, "expected 873 permutations");
            });
  criterion(3, "planar Bruhat graphs are cubes of dimension <= 3 for m <= 6",
            kDefaultBudget, [](Outcome& o) { o.report(verify_cube_classification(6)); });
  criterion(4, "length-bound basis for n <= 3, m <= 7 and sharpness for n <= 4",
            kLengthBudget, length_bound);
  criterion(5, "planar counts by length match the closed forms for m <= 9",
            kDefaultBudget, counting);
  criterion(6, "Bruhat order and planarity oracle equivalence", kOracleBudget,
            oracle_equivalence);
  criterion(7, "path lengths on S_4 and induced pattern subgraphs for |tau| <= 5",
            kDefaultBudget, structural_invariants);
  criterion(8, "fixed-point, cycle and disjoint-cycle lemmas for n = 2, m <= 6",
            kDefaultBudget, [](Outcome& o) {
              o.report(verify_fixed_point_lemma(2, 6));
              o.report(verify_cycle_lemma(6));
              o.report(verify_disjoint_cycles_lemma(2, 6));
            });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) +
                                                             " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
