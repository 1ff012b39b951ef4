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

#include "qprod/psp.hpp"

#include <set>
#include <string>

#include "qprod/error.hpp"

namespace qprod {

void local_classes_from_lists(const PairMatrix& incidence,
                              const PairMatrix& absence, std::size_t degree,
                              ColorGraph& local) {
  local.reset(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    for (std::size_t j = i + 1; j < degree; ++j) {
      if (absence.test(i, j) || !incidence.test(i, j)) {
        local.merge(static_cast<ColorGraph::Color>(i),
                    static_cast<ColorGraph::Color>(j));
      }
    }
  }
}

ColorGraph local_classes_from_lists(const PairMatrix& incidence,
                                    const PairMatrix& absence,
                                    std::size_t degree) {
  ColorGraph local;
  local_classes_from_lists(incidence, absence, degree, local);
  return local;
}

void GlobalColoringState::seed(const Graph& g, VertexId v) {
  for (const Neighbor& nb : g.neighbors(v)) {
    if (!has_color(nb.edge)) temp_color[nb.edge] = colors.add_color();
  }
}

EdgeColoring GlobalColoringState::coloring() const {
  std::vector<std::uint32_t> raw(temp_color.size(), kUncolored);
  for (EdgeId e = 0; e < raw.size(); ++e) {
    if (has_color(e)) raw[e] = color_of(e);
  }
  return EdgeColoring::from_raw(raw);
}

std::size_t PspRecord::primal_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(),
                    [](const PspEdge& e) { return e.primal; }));
}

std::size_t PspRecord::non_primal_count() const {
  return edges.size() - primal_count();
}

std::size_t PspRecord::local_class_count() const {
  std::set<ColorGraph::Color> colors;
  for (const PspEdge& e : edges) colors.insert(e.local_color);
  return colors.size();
}

EdgeColoring PspRecord::local_coloring(std::size_t num_edges) const {
  std::vector<std::uint32_t> raw(num_edges, kUncolored);
  for (const PspEdge& e : edges) raw[e.edge] = e.local_color;
  return EdgeColoring::from_raw(raw);
}

PspRecognizer::PspRecognizer(const Graph& g)
    : g_(g),
      max_degree_(g.max_degree()),
      visited_(g.num_vertices(), 0),
      primal_(g.num_vertices(), 0),
      temp_label_(g.num_vertices(), 0),
      first_primal_(g.num_vertices(), 0),
      second_primal_(g.num_vertices(), 0),
      first_edge_(g.num_vertices(), 0),
      second_edge_(g.num_vertices(), 0),
      primal_neighbors_(g.num_vertices(), 0),
      primal_vertex_(max_degree_, 0),
      primal_edge_(max_degree_, 0),
      incidence_(max_degree_),
      absence_(max_degree_),
      map_local_color_(max_degree_, kNoColor) {}

void PspRecognizer::map_or_merge(ColorGraph::Color local_color,
                                 ColorGraph::Color global,
                                 GlobalColoringState& state) {
  ColorGraph::Color& mapped = map_local_color_[local_color];
  if (mapped == kNoColor) {
    mapped = global;
  } else if (!state.colors.same(mapped, global)) {
    state.colors.merge(global, mapped);
  }
}

void PspRecognizer::recognize(VertexId c, GlobalColoringState& state,
                              PspRecord* record, bool allow_uncolored_center) {
  if (++epoch_ == 0) {
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(primal_.begin(), primal_.end(), 0);
    epoch_ = 1;
  }
  ++counters_.centers;

  // Initialization: primal labels, cleared pair matrices, empty stack.
  auto star = g_.neighbors(c);
  degree_ = star.size();
  bool touches_treated = false;
  for (std::size_t i = 0; i < degree_; ++i) {
    VertexId u = star[i].vertex;
    primal_[u] = epoch_;
    temp_label_[u] = static_cast<std::uint32_t>(i);
    primal_vertex_[i] = u;
    primal_edge_[i] = star[i].edge;
    touches_treated = touches_treated || state.has_color(star[i].edge);
  }
  if (!touches_treated && !allow_uncolored_center) {
    throw Error(ErrorCode::kNotAdjacentToTreatedSet,
                "center " + std::to_string(g_.label(c)) +
                    " has no edge in the treated part of the graph");
  }
  incidence_.clear(degree_);
  absence_.clear(degree_);
  stack_.clear();
  visited_[c] = epoch_;

  // Scan all neighbors of primal vertices and fill the incidence and absence
  // lists.
  for (std::size_t i = 0; i < degree_; ++i) {
    VertexId u = primal_vertex_[i];
    for (const Neighbor& nb : g_.neighbors(u)) {
      ++counters_.scan_entries;
      VertexId w = nb.vertex;
      if (w == c) continue;
      if (primal_[w] == epoch_) {
        // Triangle c-u-w.
        absence_.set(i, temp_label_[w]);
      } else if (visited_[w] != epoch_) {
        visited_[w] = epoch_;
        first_primal_[w] = u;
        first_edge_[w] = nb.edge;
        primal_neighbors_[w] = 1;
      } else if (primal_neighbors_[w] == 1) {
        std::size_t j = temp_label_[first_primal_[w]];
        second_primal_[w] = u;
        second_edge_[w] = nb.edge;
        primal_neighbors_[w] = 2;
        if (!incidence_.test(i, j)) {
          incidence_.set(i, j);
          stack_.push_back(w);
          ++counters_.stack_pushes;
        } else {
          // The pair spans more than one square.
          absence_.set(i, j);
        }
      } else {
        // w has at least three primal neighbors: not a unique top vertex.
        std::size_t j1 = temp_label_[first_primal_[w]];
        std::size_t j2 = temp_label_[second_primal_[w]];
        absence_.set(j1, j2);
        absence_.set(j1, i);
        absence_.set(j2, i);
        primal_neighbors_[w] = 3;
      }
    }
  }
  counters_.scan_bound += degree_ * max_degree_;

  // Local colors of the primal edges.
  local_classes_from_lists(incidence_, absence_, degree_, local_);
  counters_.local_relabels += local_.relabel_count();
  if (static_cast<double>(local_.relabel_count()) > relabel_bound(degree_)) {
    ++counters_.local_bound_violations;
  }
  auto local_of = [&](VertexId primal_vertex) {
    return local_.component_of(temp_label_[primal_vertex]);
  };

  // Map local colors of already colored primal edges to global colors.
  std::fill_n(map_local_color_.begin(), degree_, kNoColor);
  for (std::size_t i = 0; i < degree_; ++i) {
    EdgeId e = primal_edge_[i];
    if (state.has_color(e)) {
      map_or_merge(local_.component_of(static_cast<ColorGraph::Color>(i)),
                   state.temp_color[e], state);
    }
  }

  // Same for the non-primal edges at candidate top vertices. A non-primal
  // edge carries the local color of its opposite primal edge.
  for (VertexId w : stack_) {
    ColorGraph::Color b1 = local_of(first_primal_[w]);
    ColorGraph::Color b2 = local_of(second_primal_[w]);
    if (b1 == b2) continue;
    if (state.has_color(first_edge_[w])) {
      map_or_merge(b2, state.temp_color[first_edge_[w]], state);
    }
    if (state.has_color(second_edge_[w])) {
      map_or_merge(b1, state.temp_color[second_edge_[w]], state);
    }
  }

  // Color the remaining PSP edges.
  auto mapped = [&](ColorGraph::Color b) {
    if (map_local_color_[b] == kNoColor) {
      map_local_color_[b] = state.colors.add_color();
      ++counters_.fresh_global_colors;
    }
    return map_local_color_[b];
  };
  if (record) {
    record->center = c;
    record->edges.clear();
  }
  for (std::size_t i = 0; i < degree_; ++i) {
    EdgeId e = primal_edge_[i];
    auto b = local_.component_of(static_cast<ColorGraph::Color>(i));
    if (!state.has_color(e)) state.temp_color[e] = mapped(b);
    if (record) record->edges.push_back({e, true, e, b});
  }
  for (VertexId w : stack_) {
    ColorGraph::Color b1 = local_of(first_primal_[w]);
    ColorGraph::Color b2 = local_of(second_primal_[w]);
    if (b1 == b2) continue;
    EdgeId e1 = first_edge_[w];
    EdgeId e2 = second_edge_[w];
    if (!state.has_color(e1)) state.temp_color[e1] = mapped(b2);
    if (!state.has_color(e2)) state.temp_color[e2] = mapped(b1);
    if (record) {
      record->edges.push_back(
          {e1, false, primal_edge_[temp_label_[second_primal_[w]]], b2});
      record->edges.push_back(
          {e2, false, primal_edge_[temp_label_[first_primal_[w]]], b1});
    }
  }
}

PspRecord recognize_psp(const Graph& g, VertexId c, GlobalColoringState& state,
                        bool allow_uncolored_center) {
  PspRecognizer recognizer(g);
  PspRecord record;
  recognizer.recognize(c, state, &record, allow_uncolored_center);
  return record;
}

}  // namespace qprod
