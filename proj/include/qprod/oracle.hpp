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

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "qprod/edge_coloring.hpp"
#include "qprod/graph.hpp"

// Brute-force reference implementations built straight from the definitions
// of the edge relations. Nothing in here is shared with the fast path: the
// oracle derives its own adjacency from the edge list and computes closures
// by plain graph search. Speed is not a goal.
namespace qprod::oracle {

/// How condition (i) of the delta relation reads "unique square".
enum class UniqueSquareRule {
  /// Exactly one top vertex x != v for the pair (literal reading).
  kUniqueSquare,
  /// Additionally require that x is a unique top vertex, |N(x) & N(v)| == 2.
  kUniqueSquareAndTopVertex,
};

/// Symmetric relation on edges; reflexive pairs are implicit.
struct EdgePairRelation {
  std::size_t num_edges = 0;
  std::set<std::pair<EdgeId, EdgeId>> pairs;  // stored with first < second

  void add(EdgeId e, EdgeId f);
  bool contains(EdgeId e, EdgeId f) const;
};

EdgePairRelation delta(const Graph& g,
                       UniqueSquareRule rule = UniqueSquareRule::kUniqueSquare);

/// Connected components of the relation over all edges, canonically labelled.
EdgeColoring transitive_closure(const EdgePairRelation& r);

/// Pairs of delta with at least one edge incident to v.
EdgePairRelation d_v(const Graph& g, VertexId v,
                     UniqueSquareRule rule = UniqueSquareRule::kUniqueSquare);

struct Psp {
  VertexId center = 0;
  std::vector<EdgeId> primal;      // sorted
  std::vector<EdgeId> non_primal;  // sorted

  std::vector<EdgeId> edges() const;  // sorted union
  std::vector<VertexId> vertices(const Graph& g) const;
};

Psp psp(const Graph& g, VertexId v);

/// Classes of the center-local closure restricted to the PSP edges. Edges
/// outside the PSP are uncolored.
EdgeColoring local_coloring(const Graph& g, VertexId v);

/// Closure of the union of the local colorings of the vertices in w. Throws
/// Error(kDisconnectedW) if the induced subgraph on w is not connected.
EdgeColoring global_coloring(const Graph& g, std::span<const VertexId> w);

/// delta* computed as transitive_closure(delta(g)).
EdgeColoring delta_star(const Graph& g,
                        UniqueSquareRule rule = UniqueSquareRule::kUniqueSquare);

// Square predicates shared by the property tests.

/// All x != v adjacent to both u and w.
std::vector<VertexId> top_vertices(const Graph& g, VertexId v, VertexId u,
                                   VertexId w);
/// Whether v-u-x-w-v is an induced 4-cycle.
bool is_chordless_square(const Graph& g, VertexId v, VertexId u, VertexId x,
                         VertexId w);
/// |N(x) & N(v)| == 2.
bool is_unique_top_vertex(const Graph& g, VertexId v, VertexId x);

/// All-pairs shortest path distances (BFS); unreachable pairs get SIZE_MAX.
std::vector<std::vector<std::size_t>> distances(const Graph& g);

}  // namespace qprod::oracle
