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

#include "commands.hpp"

#include <charconv>
#include <optional>
#include <string_view>

#include "CLI11.hpp"
#include "bruhatkit/bruhat.hpp"
#include "bruhatkit/permutation.hpp"
#include "bruhatkit/theorems.hpp"
#include "graph_document.hpp"
#include "json.hpp"

namespace bruhatkit::cli {

namespace {

using nlohmann::json;

constexpr int kWarnAboveSize = 12;
constexpr std::size_t kDefaultVertexCap = 10000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Permutation parse_argument(const std::string& text, std::ostream& err) {
  Permutation p = parse_one_line(text);
  if (p.size() > kWarnAboveSize) {
    err << "warning: permutation of size " << p.size()
        << " exceeds " << kWarnAboveSize
        << "; Bruhat interval enumeration grows factorially\n";
  }
  return p;
}

std::string cycles_text(const Permutation& p) {
  std::string out;
  for (const auto& cycle : cycle_decomposition(p)) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<int> word_of(const Permutation& p) {
  return {p.word().begin(), p.word().end()};
}

// --- analyze -------------------------------------------------------------

struct AnalyzeOptions {
  std::string perm;
  std::size_t max_vertices = kDefaultVertexCap;
  bool json = false;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  const Permutation p = parse_argument(o.perm, err);
  const bool has_321 = contains_pattern(Permutation({3, 2, 1}), p);
  std::optional<std::pair<int, int>> graph_size;
  try {
    const DirectedGraph g = bruhat_graph(p, o.max_vertices);
    graph_size = std::pair(g.vertex_count(), g.edge_count());
  } catch (const IntervalTooLarge&) {
  }

  if (o.json) {
    json report = {{"permutation", word_of(p)},
                   {"size", p.size()},
                   {"length", coxeter_length(p)},
                   {"absolute_length", absolute_length(p)},
                   {"cycles", cycle_decomposition(p)},
                   {"contains_321", has_321},
                   {"planar", planar_by_characterization(p)},
                   {"bruhat_graph", nullptr}};
    if (graph_size) {
      report["bruhat_graph"] = {{"vertices", graph_size->first},
                                {"edges", graph_size->second}};
    }
    out << report.dump(2) << "\n";
    return kSuccess;
  }
  out << "permutation: " << p.to_string() << "\n"
      << "size: " << p.size() << "\n"
      << "length: " << coxeter_length(p) << "\n"
      << "absolute length: " << absolute_length(p) << "\n"
      << "cycles: " << cycles_text(p) << "\n"
      << "contains 321: " << (has_321 ? "yes" : "no") << "\n"
      << "planar: " << (planar_by_characterization(p) ? "yes" : "no") << "\n";
  if (graph_size) {
    out << "bruhat graph: " << graph_size->first << " vertices, "
        << graph_size->second << " edges\n";
  } else {
    out << "bruhat graph: skipped (more than " << o.max_vertices
        << " vertices)\n";
  }
  return kSuccess;
}

// --- graph ---------------------------------------------------------------

struct GraphOptions {
  std::string perm;
  std::string format = "dot";
  std::size_t max_vertices = kDefaultVertexCap;
};

int cmd_graph(const GraphOptions& o, std::ostream& out, std::ostream& err) {
  const Permutation p = parse_argument(o.perm, err);
  DirectedGraph g;
  try {
    g = bruhat_graph(p, o.max_vertices);
  } catch (const IntervalTooLarge& e) {
    err << "error: " << e.what() << " (raise --max-vertices)\n";
    return kResourceCap;
  }
  const GraphDocument doc = make_graph_document(p, g);
  out << (o.format == "json" ? to_json_text(doc) : to_dot(doc));
  return kSuccess;
}

// --- basis ---------------------------------------------------------------

struct BasisOptions {
  std::string property;
  std::optional<int> ceiling;
};

int parse_positive(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      value < 1) {
    throw UsageError("invalid " + what + " '" + std::string(text) + "'");
  }
  return value;
}

int cmd_basis(const BasisOptions& o, std::ostream& out) {
  constexpr std::string_view kMaxLength = "max-length:";
  BasisReport report;
  if (o.property == "planar") {
    report = compute_planar_basis(o.ceiling.value_or(8));
  } else if (o.property.starts_with(kMaxLength)) {
    const int n = parse_positive(
        std::string_view(o.property).substr(kMaxLength.size()), "length bound");
    report = compute_length_basis(n, o.ceiling);
  } else {
    throw UsageError("unknown property '" + o.property +
                     "' (expected planar or max-length:<n>)");
  }
  for (const auto& p : report.basis) out << p.to_string() << "\n";
  return kSuccess;
}

// --- verify / count ------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  std::optional<int> n;
  std::optional<int> max_m;
  int threads = 1;
  int random_graphs = 50;
  std::uint32_t seed = 20240611;
  bool json = false;
};

void require_range(int value, int lo, int hi, const std::string& name) {
  if (value < lo || value > hi) {
    throw UsageError(name + " must be in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(value));
  }
}

json report_json(const VerificationReport& r) {
  std::vector<std::string> counterexamples;
  for (const auto& p : r.counterexamples) counterexamples.push_back(p.to_string());
  return {{"suite", r.suite},        {"n", r.n},
          {"max_m", r.max_m},        {"checked", r.checked},
          {"passed", r.passed},      {"counterexamples", counterexamples},
          {"mismatches", r.mismatches}};
}

void print_report(const VerificationReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report_json(r).dump(2) << "\n";
    return;
  }
  out << "suite: " << r.suite << "\n";
  out << "parameters:";
  if (r.n > 0) out << " n=" << r.n;
  if (r.max_m > 0) out << " max_m=" << r.max_m;
  out << "\n";
  out << "checked: " << r.checked << "\n";
  out << "result: " << (r.passed ? "PASSED" : "FAILED") << "\n";
  for (const auto& p : r.counterexamples) out << "counterexample: " << p.to_string() << "\n";
  for (const auto& m : r.mismatches) out << "mismatch: " << m << "\n";
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  require_range(o.threads, 1, 256, "--threads");
  const SuiteOptions opts{.threads = o.threads};
  VerificationReport report;
  const std::string& s = o.suite;
  if (s == "planar-char" || s == "cube-class") {
    const int max_m = o.max_m.value_or(6);
    require_range(max_m, 1, 7, "--max-m");
    report = s == "planar-char" ? verify_planar_characterization(max_m, opts)
                                : verify_cube_classification(max_m, opts);
  } else if (s == "length-basis") {
    const int n = o.n.value_or(3);
    const int max_m = o.max_m.value_or(7);
    require_range(n, 1, 4, "--n");
    require_range(max_m, 1, 9, "--max-m");
    report = verify_length_basis(n, max_m, opts);
  } else if (s == "sharpness") {
    const int n = o.n.value_or(4);
    require_range(n, 1, 8, "--n");
    report = verify_sharpness(n);
  } else if (s == "lemmas") {
    const int n = o.n.value_or(2);
    const int max_m = o.max_m.value_or(6);
    require_range(n, 1, 4, "--n");
    require_range(max_m, 1, 9, "--max-m");
    report = verify_lemmas(n, max_m, opts);
  } else if (s == "counts") {
    const int max_m = o.max_m.value_or(9);
    require_range(max_m, 1, 11, "--max-m");
    if (!o.json) {
      out << "m length enumerated formula\n";
      for (const auto& c : planar_counts(max_m, opts)) {
        out << c.m << " " << c.length << " " << c.enumerated << " " << c.formula
            << "\n";
      }
    }
    report = verify_counts(max_m, opts);
  } else if (s == "bruhat-oracle") {
    const int n = o.n.value_or(o.max_m.value_or(5));
    require_range(n, 1, 6, "--n");
    report = verify_bruhat_oracle(n, opts);
  } else if (s == "planarity-oracle") {
    require_range(o.random_graphs, 0, 500, "--random");
    report = verify_planarity_oracle(o.random_graphs, o.seed);
  } else {
    throw UsageError("unknown suite '" + s + "'");
  }
  print_report(report, o.json, out);
  return report.passed ? kSuccess : kVerificationFailed;
}

// --- contains ------------------------------------------------------------

struct ContainsOptions {
  std::string pattern;
  std::string target;
  bool count_only = false;
};

int cmd_contains(const ContainsOptions& o, std::ostream& out, std::ostream& err) {
  const Permutation pattern = parse_argument(o.pattern, err);
  const Permutation target = parse_argument(o.target, err);
  const auto found = embeddings(pattern, target);
  if (o.count_only) {
    out << found.size() << "\n";
    return kSuccess;
  }
  for (const auto& e : found) {
    out << '(';
    for (std::size_t i = 0; i < e.indices.size(); ++i) {
      if (i > 0) out << ',';
      out << e.indices[i];
    }
    out << ")\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bruhat graphs, pattern avoidance and planarity of permutations",
               "bruhatkit"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Statistics of one permutation");
  analyze_cmd->add_option("perm", analyze.perm, "One-line permutation")->required();
  analyze_cmd->add_option("--max-vertices", analyze.max_vertices,
                          "Skip the Bruhat graph above this many vertices");
  analyze_cmd->add_flag("--json", analyze.json, "Structured output");

  GraphOptions graph;
  auto* graph_cmd = app.add_subcommand("graph", "Print the Bruhat graph B(perm)");
  graph_cmd->add_option("perm", graph.perm, "One-line permutation")->required();
  graph_cmd->add_option("--format", graph.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("--max-vertices", graph.max_vertices,
                        "Fail with exit code 3 above this many vertices");

  BasisOptions basis;
  auto* basis_cmd = app.add_subcommand("basis", "Minimal avoidance basis");
  basis_cmd->add_option("property", basis.property, "planar | max-length:<n>")
      ->required();
  basis_cmd->add_option("ceiling", basis.ceiling,
                        "Largest size searched (default 8 for planar, 2n for "
                        "max-length:<n>)")
      ->check(CLI::Range(1, 10));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd
      ->add_option("suite", verify.suite,
                   "planar-char | cube-class | length-basis | sharpness | "
                   "lemmas | counts | bruhat-oracle | planarity-oracle")
      ->required();
  verify_cmd->add_option("--n", verify.n, "Length bound / group size");
  verify_cmd->add_option("--max-m", verify.max_m, "Largest permutation size");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads");
  verify_cmd->add_option("--random", verify.random_graphs,
                         "Random graphs in the planarity-oracle corpus");
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random graphs");
  verify_cmd->add_flag("--json", verify.json, "Structured output");

  VerifyOptions count;
  count.suite = "counts";
  auto* count_cmd = app.add_subcommand("count", "Alias for 'verify counts'");
  count_cmd->add_option("--max-m", count.max_m, "Largest permutation size");
  count_cmd->add_option("--threads", count.threads, "Worker threads");
  count_cmd->add_flag("--json", count.json, "Structured output");

  ContainsOptions contains;
  auto* contains_cmd =
      app.add_subcommand("contains", "List occurrences of a pattern in a target");
  contains_cmd->add_option("pattern", contains.pattern)->required();
  contains_cmd->add_option("target", contains.target)->required();
  contains_cmd->add_flag("--count", contains.count_only, "Print only the number");

  std::vector<const char*> argv{"bruhatkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze, out, err);
    if (*graph_cmd) return cmd_graph(graph, out, err);
    if (*basis_cmd) return cmd_basis(basis, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*count_cmd) return cmd_verify(count, out);
    if (*contains_cmd) return cmd_contains(contains, out, err);
  } catch (const PermutationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace bruhatkit::cli
