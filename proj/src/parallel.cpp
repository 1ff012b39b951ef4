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

#include "qprod/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include "qprod/color_graph.hpp"
#include "qprod/error.hpp"

namespace qprod {

Partition parse_partition(std::istream& in, const Graph& g) {
  Partition p;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    p.blocks.push_back(parse_vertex_set(row, g));
  }
  return p;
}

void validate_partition(const Graph& g, const Partition& p) {
  const std::size_t n = g.num_vertices();
  std::vector<std::int64_t> block_of(n, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "block " + std::to_string(b) + " is empty");
    }
    for (VertexId v : p.blocks[b]) {
      if (v >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "vertex " + std::to_string(v) + " out of range");
      }
      if (block_of[v] != -1) {
        throw Error(ErrorCode::kOverlap,
                    "vertex " + std::to_string(g.label(v)) +
                        " appears in more than one block");
      }
      block_of[v] = static_cast<std::int64_t>(b);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (block_of[v] == -1) {
      throw Error(ErrorCode::kNotCovering,
                  "vertex " + std::to_string(g.label(v)) + " is in no block");
    }
  }
  std::vector<char> in_block(n, 0);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (VertexId v : p.blocks[b]) in_block[v] = 1;
    auto reached = bfs_order(g, p.blocks[b][0], in_block).sequence.size();
    for (VertexId v : p.blocks[b]) in_block[v] = 0;
    if (reached != p.blocks[b].size()) {
      throw Error(ErrorCode::kBlockDisconnected,
                  "block " + std::to_string(b) + " is not connected");
    }
  }
}

namespace {

struct BlockOutput {
  std::vector<ColorGraph::Color> slot;  // per edge, kNoColor if untouched
  std::vector<EdgeId> boundary_stack;
  std::size_t num_colors = 0;
  RunStats stats;
};

BlockOutput run_block(const Graph& g, const std::vector<VertexId>& block) {
  VertexId root = *std::min_element(block.begin(), block.end());
  TreatedSetRun run = run_treated_set(g, block, root, true);
  BlockOutput out;
  out.slot.assign(g.num_edges(), kNoColor);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (run.state.has_color(e)) out.slot[e] = run.state.color_of(e);
  }
  out.boundary_stack = std::move(run.boundary_stack);
  out.num_colors = run.state.colors.num_colors();
  out.stats = run.stats;
  return out;
}

void add_counters(PspCounters& into, const PspCounters& from) {
  into.centers += from.centers;
  into.scan_entries += from.scan_entries;
  into.scan_bound += from.scan_bound;
  into.stack_pushes += from.stack_pushes;
  into.fresh_global_colors += from.fresh_global_colors;
  into.local_relabels += from.local_relabels;
  into.local_bound_violations += from.local_bound_violations;
}

}  // namespace

GlobalColoringResult compute_delta_star_parallel(const Graph& g,
                                                 const Partition& p,
                                                 std::size_t workers,
                                                 ParallelStats* stats) {
  validate_partition(g, p);
  if (workers == 0) {
    throw Error(ErrorCode::kInvalidArgument, "workers must be at least 1");
  }
  const std::size_t k = p.blocks.size();
  const std::size_t m = g.num_edges();

  // Phase 1: independent block runs. Each worker writes only the outputs of
  // the blocks it claimed.
  std::vector<BlockOutput> outputs(k);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t b = next++; b < k; b = next++) {
      try {
        outputs[b] = run_block(g, p.blocks[b]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < std::min(workers, k); ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  // Phase 2: one color graph over the disjoint color ranges of all blocks.
  std::vector<ColorGraph::Color> offset(k + 1, 0);
  for (std::size_t b = 0; b < k; ++b) {
    offset[b + 1] =
        offset[b] + static_cast<ColorGraph::Color>(outputs[b].num_colors);
  }
  ColorGraph unified(offset[k]);
  ColorGraph stack_only(offset[k]);
  std::vector<ColorGraph::Color> representative(m, kNoColor);
  ParallelStats local_stats;
  local_stats.blocks = k;

  for (EdgeId e = 0; e < m; ++e) {
    std::size_t colored_by = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if (outputs[b].slot[e] == kNoColor) continue;
      ColorGraph::Color c = offset[b] + outputs[b].slot[e];
      if (colored_by++ == 0) {
        representative[e] = c;
      } else {
        unified.merge(representative[e], c);
      }
    }
    if (colored_by > 1) ++local_stats.multi_colored_edges;
  }

  for (std::size_t b = 0; b < k; ++b) {
    local_stats.boundary_stack_edges += outputs[b].boundary_stack.size();
    for (EdgeId e : outputs[b].boundary_stack) {
      for (std::size_t other = 0; other < k; ++other) {
        if (outputs[other].slot[e] == kNoColor) continue;
        stack_only.merge(representative[e],
                         offset[other] + outputs[other].slot[e]);
      }
    }
  }

  std::vector<std::uint32_t> raw(m, kUncolored);
  std::vector<std::uint32_t> raw_stack_only(m, kUncolored);
  for (EdgeId e = 0; e < m; ++e) {
    if (representative[e] == kNoColor) continue;
    raw[e] = unified.component_of(representative[e]);
    raw_stack_only[e] = stack_only.component_of(representative[e]);
  }

  GlobalColoringResult result;
  result.coloring = EdgeColoring::from_raw(raw);
  result.class_count = result.coloring.class_count();
  result.covered_edges = result.coloring.covered_edges();
  result.treated.reserve(g.num_vertices());
  result.stats.merge_bound_ok = true;
  for (std::size_t b = 0; b < k; ++b) {
    result.treated.insert(result.treated.end(), p.blocks[b].begin(),
                          p.blocks[b].end());
    add_counters(result.stats.psp, outputs[b].stats.psp);
    result.stats.global_colors += outputs[b].stats.global_colors;
    result.stats.global_relabels += outputs[b].stats.global_relabels;
    result.stats.merge_bound_ok =
        result.stats.merge_bound_ok && outputs[b].stats.merge_bound_ok;
  }

  local_stats.unified_colors = unified.num_colors();
  local_stats.unified_relabels = unified.relabel_count();
  local_stats.merge_bound_ok =
      static_cast<double>(unified.relabel_count()) <=
          relabel_bound(unified.num_colors()) &&
      static_cast<double>(stack_only.relabel_count()) <=
          relabel_bound(stack_only.num_colors());
  result.stats.merge_bound_ok =
      result.stats.merge_bound_ok && local_stats.merge_bound_ok;
  local_stats.stack_merge_sufficient =
      EdgeColoring::from_raw(raw_stack_only) == result.coloring;

  std::vector<std::size_t> block_of(g.num_vertices(), 0);
  for (std::size_t b = 0; b < k; ++b) {
    for (VertexId v : p.blocks[b]) block_of[v] = b;
  }
  std::vector<char> boundary(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    if (block_of[e.u] != block_of[e.v]) boundary[e.u] = boundary[e.v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (boundary[e.u] || boundary[e.v]) ++local_stats.boundary_incident_edges;
  }

  if (stats) *stats = local_stats;
  return result;
}

}  // namespace qprod
