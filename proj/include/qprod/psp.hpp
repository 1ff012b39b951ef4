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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "qprod/color_graph.hpp"
#include "qprod/edge_coloring.hpp"
#include "qprod/graph.hpp"

namespace qprod {

inline constexpr ColorGraph::Color kNoColor =
    std::numeric_limits<ColorGraph::Color>::max();

/// Square 0/1 matrix over primal-edge labels, allocated once at its maximum
/// dimension and used through a leading window.
class PairMatrix {
 public:
  explicit PairMatrix(std::size_t capacity = 0)
      : stride_(capacity), cells_(capacity * capacity, 0) {}

  /// Zeroes the dim x dim window.
  void clear(std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
      std::fill_n(cells_.begin() + i * stride_, dim, std::uint8_t{0});
    }
  }
  void set(std::size_t i, std::size_t j) {
    cells_[i * stride_ + j] = 1;
    cells_[j * stride_ + i] = 1;
  }
  bool test(std::size_t i, std::size_t j) const {
    return cells_[i * stride_ + j] != 0;
  }
  std::size_t capacity() const { return stride_; }

 private:
  std::size_t stride_;
  std::vector<std::uint8_t> cells_;
};

/// Merges the local colors of primal edges i < j whenever the pair is in the
/// absence list or missing from the incidence list. The components of the
/// result are the classes of the closure of (not-incident | absent).
void local_classes_from_lists(const PairMatrix& incidence,
                              const PairMatrix& absence, std::size_t degree,
                              ColorGraph& local);
ColorGraph local_classes_from_lists(const PairMatrix& incidence,
                                    const PairMatrix& absence,
                                    std::size_t degree);

/**
   Running global coloring of the treated edges.

   Every treated edge points at a vertex of the global color graph; the
   current color of the edge is the component of that vertex. Two edges have
   the same current color iff they are in one class of the coloring
   computed so far.
 */
struct GlobalColoringState {
  explicit GlobalColoringState(std::size_t num_edges)
      : temp_color(num_edges, kNoColor) {}

  /// Gives the edges at v pairwise different fresh colors.
  void seed(const Graph& g, VertexId v);

  bool has_color(EdgeId e) const { return temp_color[e] != kNoColor; }
  ColorGraph::Color color_of(EdgeId e) const {
    return colors.component_of(temp_color[e]);
  }
  /// Current partition of the colored edges.
  EdgeColoring coloring() const;

  std::vector<ColorGraph::Color> temp_color;
  ColorGraph colors;
};

struct PspEdge {
  EdgeId edge;
  bool primal;
  /// The primal edge this edge is opposite to (the edge itself if primal).
  EdgeId opposite_primal;
  /// Local color: component index in the local color graph.
  ColorGraph::Color local_color;
};

/// A recognized partial star product with its local coloring.
struct PspRecord {
  VertexId center = 0;
  std::vector<PspEdge> edges;  // primal edges first, in adjacency order

  std::size_t primal_count() const;
  std::size_t non_primal_count() const;
  std::size_t local_class_count() const;
  EdgeColoring local_coloring(std::size_t num_edges) const;
};

/// Work counters, accumulated over all calls of one recognizer.
struct PspCounters {
  std::uint64_t centers = 0;
  /// Adjacency entries inspected by the neighbor-of-neighbor scan.
  std::uint64_t scan_entries = 0;
  /// Sum over centers of deg(c) * max_degree.
  std::uint64_t scan_bound = 0;
  std::uint64_t stack_pushes = 0;
  /// Times a local color had no global color to map to and a fresh one was
  /// created. Zero whenever the treated set stays connected.
  std::uint64_t fresh_global_colors = 0;
  std::uint64_t local_relabels = 0;
  /// Centers whose local color graph exceeded the k log2 k + k relabel bound.
  std::uint64_t local_bound_violations = 0;
};

/**
   Recognizes the partial star product at a center and merges its local
   coloring into a running global coloring.

   All per-vertex scratch attributes are stamped with a per-call epoch, so
   only the two deg(c) x deg(c) pair matrices are cleared between centers.
   A recognizer is bound to one graph and must not be shared between threads.
 */
class PspRecognizer {
 public:
  explicit PspRecognizer(const Graph& g);

  /// Processes center c. Unless allow_uncolored_center is set, c must have at
  /// least one incident edge that already carries a global color; otherwise
  /// Error(kNotAdjacentToTreatedSet) is thrown. If record is non-null it
  /// receives the PSP and its local coloring.
  void recognize(VertexId c, GlobalColoringState& state,
                 PspRecord* record = nullptr,
                 bool allow_uncolored_center = false);

  const PspCounters& counters() const { return counters_; }

  // Scratch of the most recent call, exposed for tests.
  std::size_t last_degree() const { return degree_; }
  const PairMatrix& incidence() const { return incidence_; }
  const PairMatrix& absence() const { return absence_; }
  const std::vector<VertexId>& candidate_stack() const { return stack_; }
  const ColorGraph& local_colors() const { return local_; }

 private:
  void map_or_merge(ColorGraph::Color local_color, ColorGraph::Color global,
                    GlobalColoringState& state);

  const Graph& g_;
  std::size_t max_degree_;
  std::uint32_t epoch_ = 0;

  // Per-vertex attributes, valid when the matching stamp equals epoch_.
  std::vector<std::uint32_t> visited_;
  std::vector<std::uint32_t> primal_;
  std::vector<std::uint32_t> temp_label_;
  std::vector<VertexId> first_primal_;
  std::vector<VertexId> second_primal_;
  std::vector<EdgeId> first_edge_;
  std::vector<EdgeId> second_edge_;
  std::vector<std::uint8_t> primal_neighbors_;  // saturates at 3

  std::size_t degree_ = 0;
  std::vector<VertexId> primal_vertex_;  // by temp label
  std::vector<EdgeId> primal_edge_;      // by temp label
  PairMatrix incidence_;
  PairMatrix absence_;
  std::vector<VertexId> stack_;
  ColorGraph local_;
  std::vector<ColorGraph::Color> map_local_color_;

  PspCounters counters_;
};

/// One-shot convenience wrapper around PspRecognizer::recognize.
PspRecord recognize_psp(const Graph& g, VertexId c, GlobalColoringState& state,
                        bool allow_uncolored_center = false);

}  // namespace qprod
