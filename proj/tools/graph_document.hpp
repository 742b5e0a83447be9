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

#ifndef BRUHATKIT_TOOLS_GRAPH_DOCUMENT_HPP_
#define BRUHATKIT_TOOLS_GRAPH_DOCUMENT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bruhatkit/bruhat.hpp"
#include "bruhatkit/permutation.hpp"

namespace bruhatkit::cli {

inline constexpr std::string_view kGraphFormatVersion = "1";

// Serializable form of B(sigma). Words are JSON integer arrays.
struct GraphDocument {
  struct Vertex {
    int id;
    std::vector<int> word;
    int length;
    bool operator==(const Vertex&) const = default;
  };
  struct Edge {
    int from;
    int to;
    int a;  // transposition (a b), a < b
    int b;
    bool operator==(const Edge&) const = default;
  };

  std::string format_version{kGraphFormatVersion};
  std::vector<int> permutation;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  bool operator==(const GraphDocument&) const = default;
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GraphDocument make_graph_document(const Permutation& sigma,
                                  const DirectedGraph& g);

// Pretty-printed JSON with sorted keys and a trailing newline.
std::string to_json_text(const GraphDocument& doc);
// Throws DocumentError on malformed input or a schema violation.
GraphDocument parse_graph_document(std::string_view text);

// Directed DOT with vertices grouped into ranks by length.
std::string to_dot(const GraphDocument& doc);

}  // namespace bruhatkit::cli

#endif  // BRUHATKIT_TOOLS_GRAPH_DOCUMENT_HPP_
