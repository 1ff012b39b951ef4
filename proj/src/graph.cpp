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

#include "qprod/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "qprod/error.hpp"

namespace qprod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kRootNotInW: return "RootNotInW";
    case ErrorCode::kDisconnectedW: return "DisconnectedW";
    case ErrorCode::kNotAdjacentToTreatedSet: return "NotAdjacentToTreatedSet";
    case ErrorCode::kOverlap: return "Overlap";
    case ErrorCode::kNotCovering: return "NotCovering";
    case ErrorCode::kBlockDisconnected: return "BlockDisconnected";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::vector<std::uint64_t> identity_labels(std::size_t n) {
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  return labels;
}

}  // namespace

Graph::Graph(std::size_t n,
             std::span<const std::pair<VertexId, VertexId>> edges)
    : Graph(n, edges, identity_labels(n)) {}

Graph::Graph(std::size_t n,
             std::span<const std::pair<VertexId, VertexId>> edges,
             std::vector<std::uint64_t> labels)
    : labels_(std::move(labels)) {
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  if (labels_.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "label count differs from n");
  }

  edges_.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge endpoint out of range: " + std::to_string(a) + "-" +
                      std::to_string(b));
    }
    if (a == b) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(labels_[a]));
    }
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert((std::uint64_t{e.u} << 32) | e.v).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge " + std::to_string(labels_[e.u]) + "-" +
                      std::to_string(labels_[e.v]));
    }
    edges_.push_back(e);
  }

  // CSR by counting; neighbors of a vertex appear in edge order.
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    max_degree_ = std::max(max_degree_, offsets_[v + 1]);
    offsets_[v + 1] += offsets_[v];
  }
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }

  if (bfs_order(*this, 0).sequence.size() != n) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
}

std::optional<VertexId> Graph::vertex_with_label(std::uint64_t label) const {
  if (label < labels_.size() && labels_[label] == label) {
    return static_cast<VertexId>(label);
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

namespace {

// Splits a line into unsigned integer tokens; returns false on any token that
// is not a nonnegative integer.
bool tokenize(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

bool is_skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::vector<std::uint64_t> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto intern = [&](std::uint64_t label) {
    auto [it, inserted] =
        dense.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::vector<std::uint64_t> tokens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    if (!tokenize(line, tokens) || tokens.size() != 2) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) +
                      ": expected two nonnegative vertex ids");
    }
    VertexId a = intern(tokens[0]);
    VertexId b = intern(tokens[1]);
    edges.emplace_back(a, b);
  }
  const std::size_t n = labels.size();
  return Graph(n, edges, std::move(labels));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::vector<VertexId> parse_vertex_set(std::istream& in, const Graph& g) {
  std::vector<VertexId> out;
  std::string line;
  std::vector<std::uint64_t> tokens;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    if (!tokenize(line, tokens)) {
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) +
                      ": expected nonnegative vertex ids");
    }
    for (std::uint64_t label : tokens) {
      auto v = g.vertex_with_label(label);
      if (!v) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "unknown vertex id " + std::to_string(label));
      }
      out.push_back(*v);
    }
  }
  return out;
}

BfsOrder bfs_order(const Graph& g, VertexId root) {
  std::vector<char> all(g.num_vertices(), 1);
  return bfs_order(g, root, all);
}

BfsOrder bfs_order(const Graph& g, VertexId root,
                   std::span<const char> in_set) {
  BfsOrder order;
  order.root = root;
  if (root >= g.num_vertices() || !in_set[root]) return order;

  std::vector<char> seen(g.num_vertices(), 0);
  order.sequence.reserve(g.num_vertices());
  order.sequence.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.sequence.size(); ++head) {
    for (const Neighbor& nb : g.neighbors(order.sequence[head])) {
      if (!seen[nb.vertex] && in_set[nb.vertex]) {
        seen[nb.vertex] = 1;
        order.sequence.push_back(nb.vertex);
      }
    }
  }
  return order;
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u,
                                       VertexId w) {
  std::vector<char> mark(g.num_vertices(), 0);
  for (const Neighbor& nb : g.neighbors(u)) mark[nb.vertex] = 1;
  std::vector<VertexId> out;
  for (const Neighbor& nb : g.neighbors(w)) {
    if (mark[nb.vertex]) out.push_back(nb.vertex);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProductGraph cartesian_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.num_vertices();
  const std::size_t n2 = g2.num_vertices();
  auto index = [n2](std::size_t i, std::size_t j) {
    return static_cast<VertexId>(i * n2 + j);
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::uint8_t> factor;
  edges.reserve(g1.num_edges() * n2 + n1 * g2.num_edges());
  for (const Edge& e : g1.edges()) {
    for (std::size_t j = 0; j < n2; ++j) {
      edges.emplace_back(index(e.u, j), index(e.v, j));
      factor.push_back(1);
    }
  }
  for (std::size_t i = 0; i < n1; ++i) {
    for (const Edge& e : g2.edges()) {
      edges.emplace_back(index(i, e.u), index(i, e.v));
      factor.push_back(2);
    }
  }
  return {Graph(n1 * n2, edges), std::move(factor)};
}

}  // namespace qprod
