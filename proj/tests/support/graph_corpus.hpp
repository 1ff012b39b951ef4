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
#include <functional>
#include <random>
#include <vector>

#include "qprod/graph.hpp"

// Graph corpora and random instances shared by the test binaries.
namespace qprod::testing {

using Rng = std::mt19937_64;

/// Uniform random spanning tree plus random extra edges; m is clamped to
/// [n - 1, n (n - 1) / 2].
Graph random_connected(Rng& rng, std::size_t n, std::size_t m);

/// Calls fn for every connected graph on exactly n labelled vertices
/// (n <= 6). Returns the number of graphs visited.
std::size_t for_each_connected_labelled(std::size_t n,
                                        const std::function<void(const Graph&)>& fn);

/// One representative per isomorphism class of connected graphs on n <= 6
/// vertices, as adjacency bitmasks over the pairs (i, j), i < j.
std::vector<std::uint32_t> connected_iso_classes(std::size_t n);

/// Builds the graph of an adjacency bitmask on n vertices.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Calls fn for a set of connected 7-vertex graphs that contains every
/// isomorphism class: each 6-vertex class extended by one vertex joined to
/// every nonempty neighbor subset. Returns the number of graphs visited.
std::size_t for_each_connected_seven(const std::function<void(const Graph&)>& fn);

/// g with vertex v renamed to perm[v].
Graph permute(const Graph& g, const std::vector<VertexId>& perm);
std::vector<VertexId> random_permutation(Rng& rng, std::size_t n);

/// Random vertex set inducing a connected subgraph, grown from a random
/// vertex to a random size in [1, n].
std::vector<VertexId> random_connected_subset(Rng& rng, const Graph& g);

/// Random partition into `blocks` connected blocks (blocks <= n), grown
/// from random seeds.
std::vector<std::vector<VertexId>> random_connected_partition(
    Rng& rng, const Graph& g, std::size_t blocks);

/// Circular ladder on 2k vertices whose closing rungs cross: the Moebius
/// ladder. A quasi product that is not a Cartesian product for k >= 4.
Graph moebius_ladder(std::size_t k);

}  // namespace qprod::testing
