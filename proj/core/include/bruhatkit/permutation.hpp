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

#ifndef BRUHATKIT_PERMUTATION_HPP_
#define BRUHATKIT_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bruhatkit {

// Raised for words that are not permutations of 1..n and for malformed
// one-line text.
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A permutation of {1, ..., n} in one-line notation. Positions and values
// are 1-based throughout the public interface. Immutable once built.
class Permutation {
 public:
  // Tag for callers that already guarantee the word is a permutation
  // (enumeration loops); skips validation.
  struct Unchecked {};

  explicit Permutation(std::vector<int> word);
  Permutation(Unchecked, std::vector<int> word) noexcept
      : word_(std::move(word)) {}

  static Permutation identity(int n);
  // 2 1 4 3 ... (2n) (2n-1), an element of S_{2n}.
  static Permutation adjacent_involution(int pairs);
  // n n-1 ... 1, the longest element of S_n.
  static Permutation reversal(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  // Value at 1-based position `pos`.
  int at(int pos) const { return word_.at(static_cast<std::size_t>(pos - 1)); }
  std::span<const int> word() const noexcept { return word_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  // Digit string when every entry is at most 9, comma-separated otherwise.
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  // Ordered by size first, then lexicographically by word.
  std::strong_ordering operator<=>(const Permutation& other) const;

 private:
  std::vector<int> word_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// The transposition swapping a and b, with 1 <= a < b. Acting on the left of
// a permutation it swaps the *values* a and b in the one-line word.
struct Transposition {
  int a;
  int b;

  Transposition(int first, int second);
  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition&) const = default;
};

// Strictly increasing 1-based positions into a target permutation.
struct Embedding {
  std::vector<int> indices;

  bool operator==(const Embedding&) const = default;
  auto operator<=>(const Embedding&) const = default;
};

// Accepts "3412" (only when every entry is a single digit) or "10,2,...,1".
// Surrounding whitespace is ignored.
Permutation parse_one_line(std::string_view text);

// Number of inversions, i.e. pairs i < j with p(i) > p(j).
int coxeter_length(const Permutation& p);

// n minus the number of disjoint cycles (fixed points count as cycles).
int absolute_length(const Permutation& p);

// Cycles of the map i -> p(i); each cycle starts at its minimum and cycles
// are ordered by that minimum.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

int fixed_point_count(const Permutation& p);

// Left multiplication t * p.
Permutation apply_transposition(Transposition t, const Permutation& p);

// The permutation order-isomorphic to `values` (which must be distinct).
Permutation standardize(std::span<const int> values);

// The pattern formed by `target` at the given 1-based positions.
Permutation pattern_at(const Permutation& target, std::span<const int> indices);

// Every occurrence of `pattern` in `target`, in lexicographic order of the
// index tuples. Throws PermutationError if the pattern is longer than the
// target.
std::vector<Embedding> embeddings(const Permutation& pattern,
                                  const Permutation& target);

// False (rather than an error) when the pattern is longer than the target.
bool contains_pattern(const Permutation& pattern, const Permutation& target);

bool avoids_all(const Permutation& target,
                std::span<const Permutation> patterns);

// Visits S_n in lexicographic order of the word.
void for_each_permutation(int n,
                          const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> all_permutations(int n);

}  // namespace bruhatkit

#endif  // BRUHATKIT_PERMUTATION_HPP_
