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

#include "graph_document.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace bruhatkit::cli {

namespace {

using nlohmann::json;

std::string word_text(const std::vector<int>& word) {
  return Permutation(Permutation::Unchecked{}, word).to_string();
}

void check(bool ok, const std::string& what) {
  if (!ok) throw DocumentError("invalid graph document: " + what);
}

}  // namespace

GraphDocument make_graph_document(const Permutation& sigma,
                                  const DirectedGraph& g) {
  GraphDocument doc;
  doc.permutation.assign(sigma.word().begin(), sigma.word().end());
  for (int id = 0; id < g.vertex_count(); ++id) {
    const auto& v = g.vertices()[id];
    doc.vertices.push_back(
        {id, std::vector<int>(v.label.word().begin(), v.label.word().end()),
         v.length});
  }
  for (const auto& e : g.edges()) {
    doc.edges.push_back({e.source, e.target, e.transposition.a, e.transposition.b});
  }
  return doc;
}

std::string to_json_text(const GraphDocument& doc) {
  json vertices = json::array();
  for (const auto& v : doc.vertices) {
    vertices.push_back({{"id", v.id}, {"word", v.word}, {"length", v.length}});
  }
  json edges = json::array();
  for (const auto& e : doc.edges) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"transposition", json::array({e.a, e.b})}});
  }
  const json root = {{"format_version", doc.format_version},
                     {"permutation", doc.permutation},
                     {"vertices", std::move(vertices)},
                     {"edges", std::move(edges)}};
  return root.dump(2) + "\n";
}

GraphDocument parse_graph_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  GraphDocument doc;
  try {
    doc.format_version = root.at("format_version").get<std::string>();
    doc.permutation = root.at("permutation").get<std::vector<int>>();
    for (const auto& v : root.at("vertices")) {
      doc.vertices.push_back({v.at("id").get<int>(),
                              v.at("word").get<std::vector<int>>(),
                              v.at("length").get<int>()});
    }
    for (const auto& e : root.at("edges")) {
      const auto t = e.at("transposition").get<std::vector<int>>();
      check(t.size() == 2, "transposition must have two entries");
      doc.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                           t[0], t[1]});
    }
  } catch (const json::exception& e) {
    throw DocumentError(std::string("schema violation: ") + e.what());
  }
  check(doc.format_version == kGraphFormatVersion,
        "unsupported format_version " + doc.format_version);
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    check(doc.vertices[i].id == static_cast<int>(i), "ids must be 0..n-1 in order");
  }
  const int n = static_cast<int>(doc.vertices.size());
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const auto& e = doc.edges[i];
    check(e.from >= 0 && e.from < n && e.to >= 0 && e.to < n,
          "edge endpoint out of range");
    check(e.a < e.b, "transposition entries must be increasing");
    if (i > 0) {
      const auto& prev = doc.edges[i - 1];
      check(std::pair(prev.from, prev.to) < std::pair(e.from, e.to),
            "edges must be sorted by (from, to) without duplicates");
    }
  }
  return doc;
}

std::string to_dot(const GraphDocument& doc) {
  std::ostringstream out;
  out << "digraph \"B(" << word_text(doc.permutation) << ")\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  std::map<int, std::vector<const GraphDocument::Vertex*>> ranks;
  for (const auto& v : doc.vertices) ranks[v.length].push_back(&v);
  for (const auto& [length, members] : ranks) {
    out << "  { rank=same;";
    for (const auto* v : members) out << " \"" << word_text(v->word) << "\";";
    out << " }\n";
  }
  for (const auto& e : doc.edges) {
    out << "  \"" << word_text(doc.vertices[e.from].word) << "\" -> \""
        << word_text(doc.vertices[e.to].word) << "\" [label=\"(" << e.a << " "
        << e.b << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bruhatkit::cli
