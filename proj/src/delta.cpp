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

#include "qprod/delta.hpp"

#include <numeric>
#include <string>

#include "qprod/error.hpp"

namespace qprod {

TreatedSetRun run_treated_set(const Graph& g, std::span<const VertexId> w,
                              VertexId v0, bool collect_boundary) {
  std::vector<char> in_w(g.num_vertices(), 0);
  std::size_t distinct = 0;
  for (VertexId v : w) {
    if (v >= g.num_vertices()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range");
    }
    if (!in_w[v]) ++distinct;
    in_w[v] = 1;
  }
  if (v0 >= g.num_vertices() || !in_w[v0]) {
    throw Error(ErrorCode::kRootNotInW, "root is not in the treated set");
  }

  // BFS order inside <W>.
  TreatedSetRun run{GlobalColoringState(g.num_edges()), {}, {}, {}};
  run.order = bfs_order(g, v0, in_w).sequence;
  if (run.order.size() != distinct) {
    throw Error(ErrorCode::kDisconnectedW,
                "treated set does not induce a connected subgraph");
  }

  run.state.seed(g, v0);
  PspRecognizer recognizer(g);
  PspRecord record;
  std::vector<char> on_stack;
  if (collect_boundary) on_stack.assign(g.num_edges(), 0);

  bool first = true;
  for (VertexId c : run.order) {
    recognizer.recognize(c, run.state, collect_boundary ? &record : nullptr,
                         first);
    first = false;
    if (collect_boundary) {
      for (const PspEdge& pe : record.edges) {
        const Edge& e = g.edge(pe.edge);
        if ((!in_w[e.u] || !in_w[e.v]) && !on_stack[pe.edge]) {
          on_stack[pe.edge] = 1;
          run.boundary_stack.push_back(pe.edge);
        }
      }
    }
  }

  run.stats.psp = recognizer.counters();
  run.stats.global_colors = run.state.colors.num_colors();
  run.stats.global_relabels = run.state.colors.relabel_count();
  run.stats.merge_bound_ok =
      run.stats.psp.local_bound_violations == 0 &&
      static_cast<double>(run.stats.global_relabels) <=
          relabel_bound(run.stats.global_colors);
  return run;
}

GlobalColoringResult compute_global_coloring(const Graph& g,
                                             std::span<const VertexId> w,
                                             VertexId v0) {
  TreatedSetRun run = run_treated_set(g, w, v0);
  GlobalColoringResult result;
  result.coloring = run.state.coloring();
  result.treated = std::move(run.order);
  result.class_count = result.coloring.class_count();
  result.covered_edges = result.coloring.covered_edges();
  result.stats = run.stats;
  return result;
}

GlobalColoringResult compute_delta_star(const Graph& g, VertexId v0) {
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  return compute_global_coloring(g, all, v0);
}

QuasiProductReport classify_quasi_product(const GlobalColoringResult& r) {
  QuasiProductReport report;
  report.delta_star_classes = r.class_count;
  report.class_sizes = r.coloring.class_sizes();
  report.is_quasi_product = r.class_count >= 2;
  return report;
}

QuasiProductReport classify_quasi_product(const Graph& g) {
  return classify_quasi_product(compute_delta_star(g));
}

}  // namespace qprod
