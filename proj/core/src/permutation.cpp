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

#include "bruhatkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <utility>

namespace bruhatkit {

namespace {

void validate_word(const std::vector<int>& word) {
  if (word.empty()) {
    throw PermutationError("permutation must have at least one entry");
  }
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(word.size() + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw PermutationError("entry " + std::to_string(v) +
                             " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw PermutationError("duplicate entry " + std::to_string(v));
    }
    seen[v] = true;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Depth-first extension of a partial occurrence. `chosen` holds 0-based
// target positions for pattern entries 0..depth-1. Returns false to stop.
template <class Visit>
bool extend_occurrence(std::span<const int> pattern, std::span<const int> target,
                       std::vector<int>& chosen, Visit&& visit) {
  const std::size_t depth = chosen.size();
  const std::size_t k = pattern.size();
  if (depth == k) return visit(chosen);
  const std::size_t first = depth == 0 ? 0 : chosen.back() + 1;
  const std::size_t last = target.size() - (k - depth);  // inclusive
  for (std::size_t pos = first; pos <= last; ++pos) {
    bool consistent = true;
    for (std::size_t a = 0; a < depth; ++a) {
      if ((target[pos] < target[chosen[a]]) != (pattern[depth] < pattern[a])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen.push_back(static_cast<int>(pos));
    if (!extend_occurrence(pattern, target, chosen, visit)) return false;
    chosen.pop_back();
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  validate_word(word_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw PermutationError("permutation size must be positive");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(Unchecked{}, std::move(word));
}

Permutation Permutation::adjacent_involution(int pairs) {
  if (pairs < 1) throw PermutationError("need at least one pair");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(2 * pairs));
  for (int i = 1; i <= pairs; ++i) {
    word.push_back(2 * i);
    word.push_back(2 * i - 1);
  }
  return Permutation(Unchecked{}, std::move(word));
}

Permutation Permutation::reversal(int n) {
  if (n < 1) throw PermutationError("permutation size must be positive");
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[i] = n - i;
  return Permutation(Unchecked{}, std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) {
    inv[word_[i] - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(Unchecked{}, std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!digits && i > 0) out.push_back(',');
    out += std::to_string(word_[i]);
  }
  return out;
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
  if (auto c = word_.size() <=> other.word_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      word_.begin(), word_.end(), other.word_.begin(), other.word_.end());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the entries.
  std::size_t h = 1469598103934665603ull;
  for (int v : p.word()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Transposition::Transposition(int first, int second)
    : a(std::min(first, second)), b(std::max(first, second)) {
  if (a < 1 || a == b) {
    throw PermutationError("transposition needs two distinct indices >= 1");
  }
}

Permutation parse_one_line(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw PermutationError("empty permutation text");
  std::vector<int> word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw PermutationError("malformed permutation text: '" +
                               std::string(text) + "'");
      }
      word.push_back(c - '0');
    }
  } else {
    while (true) {
      const std::size_t comma = text.find(',');
      const std::string_view field = trim(text.substr(0, comma));
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw PermutationError("malformed entry '" + std::string(field) + "'");
      }
      word.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  }
  return Permutation(std::move(word));
}

int coxeter_length(const Permutation& p) {
  const auto w = p.word();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
    }
  }
  return count;
}

int absolute_length(const Permutation& p) {
  const auto w = p.word();
  std::vector<bool> seen(w.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < w.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = w[i] - 1) seen[i] = true;
  }
  return p.size() - cycles;
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  const auto w = p.word();
  std::vector<bool> seen(w.size(), false);
  std::vector<std::vector<int>> cycles;
  for (std::size_t start = 0; start < w.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = cycles.emplace_back();
    for (std::size_t i = start; !seen[i]; i = w[i] - 1) {
      seen[i] = true;
      cycle.push_back(static_cast<int>(i) + 1);
    }
  }
  return cycles;
}

int fixed_point_count(const Permutation& p) {
  int count = 0;
  for (int pos = 1; pos <= p.size(); ++pos) {
    if (p.at(pos) == pos) ++count;
  }
  return count;
}

Permutation apply_transposition(Transposition t, const Permutation& p) {
  if (t.b > p.size()) {
    throw PermutationError("transposition (" + std::to_string(t.a) + " " +
                           std::to_string(t.b) + ") out of range for size " +
                           std::to_string(p.size()));
  }
  std::vector<int> word(p.word().begin(), p.word().end());
  for (int& v : word) {
    if (v == t.a) {
      v = t.b;
    } else if (v == t.b) {
      v = t.a;
    }
  }
  return Permutation(Permutation::Unchecked{}, std::move(word));
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return values[x] < values[y]; });
  std::vector<int> word(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    word[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(word));
}

Permutation pattern_at(const Permutation& target,
                       std::span<const int> indices) {
  std::vector<int> values;
  values.reserve(indices.size());
  for (int i : indices) values.push_back(target.at(i));
  return standardize(values);
}

std::vector<Embedding> embeddings(const Permutation& pattern,
                                  const Permutation& target) {
  if (pattern.size() > target.size()) {
    throw PermutationError("pattern of size " + std::to_string(pattern.size()) +
                           " is larger than target of size " +
                           std::to_string(target.size()));
  }
  std::vector<Embedding> found;
  std::vector<int> chosen;
  chosen.reserve(pattern.word().size());
  extend_occurrence(pattern.word(), target.word(), chosen,
                    [&](const std::vector<int>& positions) {
                      Embedding e;
                      e.indices.reserve(positions.size());
                      for (int pos : positions) e.indices.push_back(pos + 1);
                      found.push_back(std::move(e));
                      return true;
                    });
  return found;
}

bool contains_pattern(const Permutation& pattern, const Permutation& target) {
  if (pattern.size() > target.size()) return false;
  bool found = false;
  std::vector<int> chosen;
  chosen.reserve(pattern.word().size());
  extend_occurrence(pattern.word(), target.word(), chosen,
                    [&](const std::vector<int>&) {
                      found = true;
                      return false;
                    });
  return found;
}

bool avoids_all(const Permutation& target,
                std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& pattern) {
                        return contains_pattern(pattern, target);
                      });
}

void for_each_permutation(
    int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 1) return;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Permutation(Permutation::Unchecked{}, word));
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace bruhatkit
