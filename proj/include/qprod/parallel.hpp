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
#include <istream>
#include <vector>

#include "qprod/delta.hpp"
#include "qprod/graph.hpp"

namespace qprod {

/// Caller-supplied decomposition of V(G) into blocks.
struct Partition {
  std::vector<std::vector<VertexId>> blocks;
};

/// One block per non-comment line, whitespace separated vertex labels.
Partition parse_partition(std::istream& in, const Graph& g);

/// Throws Error(kOverlap), Error(kNotCovering) or Error(kBlockDisconnected).
void validate_partition(const Graph& g, const Partition& p);

struct ParallelStats {
  std::size_t blocks = 0;
  /// Edges colored by more than one block.
  std::size_t multi_colored_edges = 0;
  /// Edges with an endpoint that is incident to a cross-block edge. Every
  /// multi-colored edge is one of these.
  std::size_t boundary_incident_edges = 0;
  /// Total size of the per-block boundary stacks.
  std::size_t boundary_stack_edges = 0;
  /// Whether merging only the colors of boundary-stack edges gives the same
  /// partition as merging over every multi-colored edge.
  bool stack_merge_sufficient = true;
  std::uint64_t unified_colors = 0;
  std::uint64_t unified_relabels = 0;
  bool merge_bound_ok = true;
};

/// delta* computed block-wise: every block runs the sequential driver on its
/// own (block root = smallest vertex of the block), then all colors that meet
/// on a common edge are merged. workers >= 1 threads run the blocks.
GlobalColoringResult compute_delta_star_parallel(const Graph& g,
                                                 const Partition& p,
                                                 std::size_t workers,
                                                 ParallelStats* stats = nullptr);

}  // namespace qprod
