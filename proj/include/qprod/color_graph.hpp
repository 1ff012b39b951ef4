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

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qprod {

/**
   Merge structure for temporary colors.

   The vertices of the color graph are the k initial colors. Merging two
   colors adds an edge between their components; the components of the
   (acyclic) color graph are the current colors. Every color vertex stores the
   index of its component, so reading the current color is O(1). On a merge
   the smaller component takes over the index of the larger one, which bounds
   the total relabelling work by k * log2(k).

   Members of a component are chained in an intrusive circular list, which is
   what the relabel walk iterates over. Merge edges themselves are only kept
   when the structure is built with Audit::kRecordEdges.
 */
class ColorGraph {
 public:
  using Color = std::uint32_t;

  enum class Audit { kNone, kRecordEdges };

  explicit ColorGraph(std::size_t k = 0, Audit audit = Audit::kNone);

  /// Re-initialises to k singleton components, keeping allocated capacity.
  void reset(std::size_t k);

  /// Appends a new singleton color and returns it.
  Color add_color();

  /// Joins the components of a and b. Returns false if they already share
  /// a component. On equal sizes the component of a keeps its index.
  bool merge(Color a, Color b);

  Color component_of(Color a) const { return component_[a]; }
  bool same(Color a, Color b) const { return component_[a] == component_[b]; }
  std::size_t component_size(Color component) const { return size_[component]; }

  std::size_t num_colors() const { return component_.size(); }
  std::size_t num_components() const { return component_.size() - edge_count_; }
  std::size_t edge_count() const { return edge_count_; }

  /// Total number of component-index reassignments since the last reset.
  std::uint64_t relabel_count() const { return relabels_; }

  /// Recorded merge edges; empty unless auditing.
  std::span<const std::pair<Color, Color>> merge_edges() const {
    return merge_edges_;
  }

 private:
  std::vector<Color> component_;
  std::vector<std::uint32_t> size_;
  std::vector<Color> next_;  // circular member list per component
  std::vector<std::pair<Color, Color>> merge_edges_;
  std::size_t edge_count_ = 0;
  std::uint64_t relabels_ = 0;
  Audit audit_;
};

/// Upper bound on relabels for k colors: k * log2(k) + k.
inline double relabel_bound(std::size_t k) {
  if (k == 0) return 0.0;
  double kd = static_cast<double>(k);
  return kd * std::log2(kd) + kd;
}

}  // namespace qprod
