// Copyright 2026 The qprod Authors
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

#include "qprod/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qprod/delta.hpp"
#include "qprod/error.hpp"
#include "qprod/generators.hpp"
#include "qprod/oracle.hpp"
#include "qprod/parallel.hpp"
#include "qprod/psp.hpp"

namespace qprod::cli {

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "delta-star") return Mode::kDeltaStar;
  if (text == "psp") return Mode::kPsp;
  if (text == "global") return Mode::kGlobal;
  if (text == "quasi") return Mode::kQuasi;
  if (text == "parallel") return Mode::kParallel;
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "classes") return Format::kClasses;
  if (text == "dot") return Format::kDot;
  if (text == "json-report") return Format::kJsonReport;
  return std::nullopt;
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kDeltaStar: return "delta-star";
    case Mode::kPsp: return "psp";
    case Mode::kGlobal: return "global";
    case Mode::kQuasi: return "quasi";
    case Mode::kParallel: return "parallel";
  }
  return "?";
}

void validate(const RunConfig& config) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, msg);
  };
  if (config.input.empty()) fail("--input is required");
  if ((config.mode == Mode::kParallel) != config.partition.has_value()) {
    fail("--partition is required with, and only with, --mode parallel");
  }
  if ((config.mode == Mode::kGlobal) != config.w_set.has_value()) {
    fail("--w-set is required with, and only with, --mode global");
  }
  if (config.workers == 0) fail("--workers must be at least 1");
  if (config.workers != 1 && config.mode != Mode::kParallel) {
    fail("--workers only applies to --mode parallel");
  }
}

namespace {

std::string edge_text(const Graph& g, EdgeId e) {
  return std::to_string(g.label(g.edge(e).u)) + "-" +
         std::to_string(g.label(g.edge(e).v));
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  }
  return in;
}

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  auto in = open_file(path);
  return parse_graph(in);
}

VertexId resolve_root(const Graph& g, const RunConfig& config,
                      std::span<const VertexId> w) {
  if (config.root) {
    auto v = g.vertex_with_label(*config.root);
    if (!v) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "unknown root vertex " + std::to_string(*config.root));
    }
    return *v;
  }
  // Default: the vertex with original id 0, or the first vertex of W when
  // that one is not part of W.
  VertexId v = g.vertex_with_label(0).value_or(0);
  if (!w.empty() && std::find(w.begin(), w.end(), v) == w.end()) return w[0];
  return v;
}

struct Outcome {
  EdgeColoring coloring;
  std::optional<QuasiProductReport> quasi;
  std::optional<PspRecord> psp;
  std::optional<ParallelStats> parallel;
  RunStats stats;
  double millis = 0.0;
};

Outcome execute(const Graph& g, const RunConfig& config) {
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  switch (config.mode) {
    case Mode::kDeltaStar:
    case Mode::kQuasi: {
      auto r = compute_delta_star(g, resolve_root(g, config, {}));
      if (config.mode == Mode::kQuasi) outcome.quasi = classify_quasi_product(r);
      outcome.coloring = std::move(r.coloring);
      outcome.stats = r.stats;
      break;
    }
    case Mode::kPsp: {
      GlobalColoringState state(g.num_edges());
      VertexId c = resolve_root(g, config, {});
      state.seed(g, c);
      PspRecognizer recognizer(g);
      PspRecord record;
      recognizer.recognize(c, state, &record, true);
      outcome.coloring = record.local_coloring(g.num_edges());
      outcome.stats.psp = recognizer.counters();
      outcome.psp = std::move(record);
      break;
    }
    case Mode::kGlobal: {
      auto in = open_file(*config.w_set);
      auto w = parse_vertex_set(in, g);
      auto r = compute_global_coloring(g, w, resolve_root(g, config, w));
      outcome.coloring = std::move(r.coloring);
      outcome.stats = r.stats;
      break;
    }
    case Mode::kParallel: {
      auto in = open_file(*config.partition);
      Partition p = parse_partition(in, g);
      ParallelStats ps;
      auto r = compute_delta_star_parallel(g, p, config.workers, &ps);
      outcome.coloring = std::move(r.coloring);
      outcome.stats = r.stats;
      outcome.parallel = ps;
      break;
    }
  }
  outcome.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return outcome;
}

EdgeColoring oracle_for(const Graph& g, const RunConfig& config) {
  switch (config.mode) {
    case Mode::kPsp:
      return oracle::local_coloring(g, resolve_root(g, config, {}));
    case Mode::kGlobal: {
      auto in = open_file(*config.w_set);
      return oracle::global_coloring(g, parse_vertex_set(in, g));
    }
    default:
      return oracle::delta_star(g);
  }
}

std::string json_report(const Graph& g, const RunConfig& config,
                        const Outcome& o) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["mode"] = to_string(config.mode);
  j["class_count"] = o.coloring.class_count();
  j["class_sizes"] = o.coloring.class_sizes();
  bool whole_graph = config.mode == Mode::kDeltaStar ||
                     config.mode == Mode::kQuasi ||
                     config.mode == Mode::kParallel;
  if (whole_graph) {
    j["is_quasi_product"] = o.coloring.class_count() >= 2;
  } else {
    j["is_quasi_product"] = nullptr;
  }
  j["covered_edges"] = o.coloring.covered_edges();
  auto classes = nlohmann::ordered_json::array();
  for (const auto& cls : o.coloring.classes()) {
    nlohmann::ordered_json entry;
    entry["label"] = cls.front();
    auto edges = nlohmann::ordered_json::array();
    for (EdgeId e : cls) {
      edges.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
    }
    entry["edges"] = std::move(edges);
    classes.push_back(std::move(entry));
  }
  j["classes"] = std::move(classes);
  if (o.psp) {
    j["psp"] = {{"center", g.label(o.psp->center)},
                {"primal_edges", o.psp->primal_count()},
                {"non_primal_edges", o.psp->non_primal_count()},
                {"local_classes", o.psp->local_class_count()}};
  }
  if (config.stats) j["timing"] = {{"milliseconds", o.millis}};
  return j.dump(2) + "\n";
}

void print_stats(std::ostream& err, const Outcome& o) {
  err << "time_ms=" << o.millis << " centers=" << o.stats.psp.centers
      << " scan_entries=" << o.stats.psp.scan_entries
      << " scan_bound=" << o.stats.psp.scan_bound
      << " global_colors=" << o.stats.global_colors
      << " global_relabels=" << o.stats.global_relabels
      << " fresh_global_colors=" << o.stats.psp.fresh_global_colors
      << " merge_bound_ok=" << (o.stats.merge_bound_ok ? 1 : 0) << '\n';
  if (o.parallel) {
    err << "blocks=" << o.parallel->blocks
        << " multi_colored_edges=" << o.parallel->multi_colored_edges
        << " boundary_incident_edges=" << o.parallel->boundary_incident_edges
        << " boundary_stack_edges=" << o.parallel->boundary_stack_edges
        << " stack_merge_sufficient="
        << (o.parallel->stack_merge_sufficient ? 1 : 0) << '\n';
  }
}

}  // namespace

std::string format_classes(const Graph& g, const EdgeColoring& coloring) {
  std::ostringstream out;
  for (const auto& cls : coloring.classes()) {
    out << "class " << cls.front() << ":";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      out << (i == 0 ? " " : ", ") << edge_text(g, cls[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_dot(const Graph& g, const EdgeColoring& coloring) {
  // Class ordinal in label order drives the color index.
  std::vector<std::size_t> ordinal(g.num_edges(), 0);
  std::size_t next = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (coloring.is_colored(e) && coloring.class_of(e) == e) ordinal[e] = next++;
  }
  std::ostringstream out;
  out << "graph qprod {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "  " << g.label(v) << ";\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "  " << g.label(g.edge(e).u) << " -- " << g.label(g.edge(e).v);
    if (coloring.is_colored(e)) {
      std::size_t index = ordinal[coloring.class_of(e)];
      out << " [colorindex=" << index << ", color=\"/set19/" << (index % 9) + 1
          << "\", penwidth=2];\n";
    } else {
      out << " [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
  return out.str();
}

Graph generate(const std::vector<std::string>& specs) {
  if (specs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "generate needs a family spec");
  }
  Graph g = generators::from_spec(specs[0]);
  for (std::size_t i = 1; i < specs.size(); ++i) {
    g = cartesian_product(g, generators::from_spec(specs[i])).graph;
  }
  return g;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Graph g = load_graph(config.input);
    Outcome outcome = execute(g, config);

    if (config.oracle_check) {
      EdgeColoring expected = oracle_for(g, config);
      if (auto diff = first_difference(outcome.coloring, expected)) {
        err << "oracle mismatch: edges " << edge_text(g, diff->first)
            << " and " << edge_text(g, diff->second)
            << " are grouped differently\n";
        return kExitOracleMismatch;
      }
    }

    switch (config.format) {
      case Format::kClasses:
        out << "# mode=" << to_string(config.mode)
            << " class_count=" << outcome.coloring.class_count()
            << " covered_edges=" << outcome.coloring.covered_edges() << '\n';
        if (outcome.quasi) {
          out << "# is_quasi_product="
              << (outcome.quasi->is_quasi_product ? "true" : "false") << '\n';
        }
        if (outcome.psp) {
          out << "# center=" << g.label(outcome.psp->center)
              << " primal_edges=" << outcome.psp->primal_count()
              << " non_primal_edges=" << outcome.psp->non_primal_count()
              << '\n';
        }
        out << format_classes(g, outcome.coloring);
        break;
      case Format::kDot:
        out << emit_dot(g, outcome.coloring);
        break;
      case Format::kJsonReport:
        out << json_report(g, config, outcome);
        break;
    }
    if (config.stats) print_stats(err, outcome);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace qprod::cli
