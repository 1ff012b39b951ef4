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
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qprod/graph.hpp"

namespace qprod {

inline constexpr std::uint32_t kUncolored =
    std::numeric_limits<std::uint32_t>::max();

/**
   Partition of (a subset of) the edge set into classes.

   Labels are canonical: the label of a class is the smallest EdgeId it
   contains. Edges outside the colored subset carry kUncolored. Because of the
   canonical form, two colorings describe the same partition iff they compare
   equal.
 */
class EdgeColoring {
 public:
  EdgeColoring() = default;

  /// Canonicalises arbitrary raw labels (kUncolored marks uncolored edges).
  static EdgeColoring from_raw(std::span<const std::uint32_t> raw);

  std::size_t num_edges() const { return class_of_.size(); }
  EdgeId class_of(EdgeId e) const { return class_of_[e]; }
  bool is_colored(EdgeId e) const { return class_of_[e] != kUncolored; }
  std::span<const EdgeId> labels() const { return class_of_; }

  std::size_t class_count() const { return class_count_; }
  std::size_t covered_edges() const { return covered_; }

  /// Classes sorted by label; each class lists its edges in increasing order.
  std::vector<std::vector<EdgeId>> classes() const;
  std::vector<std::size_t> class_sizes() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<EdgeId> class_of_;
  std::size_t class_count_ = 0;
  std::size_t covered_ = 0;
};

/// First pair of edges on which the partitions disagree: either the pair is
/// in one class in exactly one of the colorings, or (e, e) where e is
/// colored in only one of them.
std::optional<std::pair<EdgeId, EdgeId>> first_difference(
    const EdgeColoring& a, const EdgeColoring& b);

/// Restriction of a coloring to the colored edges of `domain`.
EdgeColoring restrict_to(const EdgeColoring& coloring,
                         const EdgeColoring& domain);

}  // namespace qprod
