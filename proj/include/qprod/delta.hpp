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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qprod/edge_coloring.hpp"
#include "qprod/graph.hpp"
#include "qprod/psp.hpp"

namespace qprod {

struct RunStats {
  PspCounters psp;
  std::uint64_t global_colors = 0;
  std::uint64_t global_relabels = 0;
  /// Every color graph of the run stayed within k log2 k + k relabels.
  bool merge_bound_ok = true;
};

struct GlobalColoringResult {
  /// Classes over the edges of the union of the PSPs; other edges are
  /// uncolored.
  EdgeColoring coloring;
  /// Treated centers in processing (BFS) order.
  std::vector<VertexId> treated;
  std::size_t class_count = 0;
  std::size_t covered_edges = 0;
  RunStats stats;
};

/// Raw output of one run of the driver: the global state before
/// canonicalisation and, optionally, the treated edges leaving the set.
struct TreatedSetRun {
  GlobalColoringState state;
  std::vector<VertexId> order;
  /// PSP edges with an endpoint outside the treated set, in the order they
  /// were first recorded. Filled only when requested.
  std::vector<EdgeId> boundary_stack;
  RunStats stats;
};

/// Processes the vertices of w in BFS order from v0 inside the subgraph
/// induced by w. Throws Error(kRootNotInW) or Error(kDisconnectedW).
TreatedSetRun run_treated_set(const Graph& g, std::span<const VertexId> w,
                              VertexId v0, bool collect_boundary = false);

GlobalColoringResult compute_global_coloring(const Graph& g,
                                             std::span<const VertexId> w,
                                             VertexId v0);

/// delta* of g, i.e. the global coloring for W = V(G).
GlobalColoringResult compute_delta_star(const Graph& g, VertexId v0 = 0);

struct QuasiProductReport {
  bool is_quasi_product = false;
  std::size_t delta_star_classes = 0;
  std::vector<std::size_t> class_sizes;
};

QuasiProductReport classify_quasi_product(const Graph& g);
QuasiProductReport classify_quasi_product(const GlobalColoringResult& delta_star);

}  // namespace qprod
