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

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qprod {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Endpoints of an edge, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Entry of the extended adjacency list: a neighbor together with the id of
/// the edge leading to it.
struct Neighbor {
  VertexId vertex;
  EdgeId edge;
};

/**
   Immutable connected simple graph.

   Edges are kept in an edge list indexed by EdgeId. The adjacency of every
   vertex is stored in compressed form and lists neighbors in the order their
   edges appear in the edge list, so all traversals are deterministic in the
   input order.

   Each vertex also carries an external label (the id used in the input file),
   which defaults to the vertex index.
 */
class Graph {
 public:
  /// Builds a graph on vertices [0, n). Throws Error on self-loops, duplicate
  /// edges, out-of-range endpoints, n == 0, or a disconnected result.
  Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);
  Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
        std::vector<std::uint64_t> labels);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  std::size_t max_degree() const { return max_degree_; }

  std::uint64_t label(VertexId v) const { return labels_[v]; }
  std::span<const std::uint64_t> labels() const { return labels_; }
  std::optional<VertexId> vertex_with_label(std::uint64_t label) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::uint64_t> labels_;
  std::size_t max_degree_ = 0;
};

/// Parses the whitespace separated edge-list format. Lines starting with '#'
/// are comments, blank lines are skipped. Vertex ids may be arbitrary
/// nonnegative integers; they are densified in first-appearance order and the
/// original ids are kept as vertex labels.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

/// Reads a whitespace separated list of vertex labels ('#' comments allowed)
/// and maps them to vertex ids of g.
std::vector<VertexId> parse_vertex_set(std::istream& in, const Graph& g);

struct BfsOrder {
  VertexId root = 0;
  std::vector<VertexId> sequence;
};

BfsOrder bfs_order(const Graph& g, VertexId root);

/// BFS restricted to the vertices with in_set[v] != 0. Vertices of the set
/// not reachable from root inside the induced subgraph are absent from the
/// result.
BfsOrder bfs_order(const Graph& g, VertexId root,
                   std::span<const char> in_set);

/// Sorted common neighbors of u and w.
std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId w);

/// Product graph together with the factor (1 or 2) each edge comes from.
struct ProductGraph {
  Graph graph;
  std::vector<std::uint8_t> factor_of_edge;
};

/// Cartesian product. Vertex (i, j) of g1 x g2 gets index i * |V(g2)| + j.
/// Factor-1 edges come first in the edge list, then factor-2 edges.
ProductGraph cartesian_product(const Graph& g1, const Graph& g2);

}  // namespace qprod
