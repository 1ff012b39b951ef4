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

#include "qprod/color_graph.hpp"

#include <numeric>

namespace qprod {

ColorGraph::ColorGraph(std::size_t k, Audit audit) : audit_(audit) {
  reset(k);
}

void ColorGraph::reset(std::size_t k) {
  component_.resize(k);
  std::iota(component_.begin(), component_.end(), Color{0});
  next_.resize(k);
  std::iota(next_.begin(), next_.end(), Color{0});
  size_.assign(k, 1);
  merge_edges_.clear();
  edge_count_ = 0;
  relabels_ = 0;
}

ColorGraph::Color ColorGraph::add_color() {
  auto c = static_cast<Color>(component_.size());
  component_.push_back(c);
  next_.push_back(c);
  size_.push_back(1);
  return c;
}

bool ColorGraph::merge(Color a, Color b) {
  Color keep = component_[a];
  Color drop = component_[b];
  if (keep == drop) return false;
  if (size_[keep] < size_[drop]) {
    std::swap(keep, drop);
  }

  // drop is the component index itself, which is one of its members.
  Color v = drop;
  do {
    component_[v] = keep;
    ++relabels_;
    v = next_[v];
  } while (v != drop);
  std::swap(next_[keep], next_[drop]);  // splice the two circular lists

  size_[keep] += size_[drop];
  size_[drop] = 0;
  ++edge_count_;
  if (audit_ == Audit::kRecordEdges) merge_edges_.emplace_back(a, b);
  return true;
}

}  // namespace qprod
