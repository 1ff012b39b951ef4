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

#include "qprod/edge_coloring.hpp"

#include <unordered_map>

namespace qprod {

EdgeColoring EdgeColoring::from_raw(std::span<const std::uint32_t> raw) {
  EdgeColoring out;
  out.class_of_.resize(raw.size(), kUncolored);
  std::unordered_map<std::uint32_t, EdgeId> first_edge;
  for (EdgeId e = 0; e < raw.size(); ++e) {
    if (raw[e] == kUncolored) continue;
    auto [it, inserted] = first_edge.try_emplace(raw[e], e);
    out.class_of_[e] = it->second;
    ++out.covered_;
  }
  out.class_count_ = first_edge.size();
  return out;
}

std::vector<std::vector<EdgeId>> EdgeColoring::classes() const {
  std::vector<std::size_t> slot(class_of_.size(), 0);
  std::vector<std::vector<EdgeId>> out;
  out.reserve(class_count_);
  for (EdgeId e = 0; e < class_of_.size(); ++e) {
    if (class_of_[e] == kUncolored) continue;
    if (class_of_[e] == e) {
      slot[e] = out.size();
      out.emplace_back();
    }
    out[slot[class_of_[e]]].push_back(e);
  }
  return out;
}

std::vector<std::size_t> EdgeColoring::class_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& c : classes()) sizes.push_back(c.size());
  return sizes;
}

std::optional<std::pair<EdgeId, EdgeId>> first_difference(
    const EdgeColoring& a, const EdgeColoring& b) {
  if (a.num_edges() != b.num_edges()) return std::pair<EdgeId, EdgeId>{0, 0};
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    if (a.is_colored(e) != b.is_colored(e)) return std::pair{e, e};
    // With canonical labels the representative of e's class is the smallest
    // member; a mismatch means e is grouped with different edges.
    if (a.class_of(e) != b.class_of(e)) {
      EdgeId f = std::min(a.class_of(e), b.class_of(e));
      return std::pair{f, e};
    }
  }
  return std::nullopt;
}

EdgeColoring restrict_to(const EdgeColoring& coloring,
                         const EdgeColoring& domain) {
  std::vector<std::uint32_t> raw(coloring.num_edges(), kUncolored);
  for (EdgeId e = 0; e < raw.size(); ++e) {
    if (domain.is_colored(e)) raw[e] = coloring.class_of(e);
  }
  return EdgeColoring::from_raw(raw);
}

}  // namespace qprod
