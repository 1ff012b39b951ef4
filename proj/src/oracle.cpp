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

#include "qprod/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "qprod/error.hpp"

namespace qprod::oracle {

namespace {

// Plain adjacency sets and an endpoint -> edge map, rebuilt from the edge list.
class Adjacency {
 public:
  explicit Adjacency(const Graph& g) : n_(g.num_vertices()), nbrs_(n_) {
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const Edge& e = g.edge(id);
      nbrs_[e.u].insert(e.v);
      nbrs_[e.v].insert(e.u);
      edge_id_[{e.u, e.v}] = id;
    }
  }

  bool adjacent(VertexId a, VertexId b) const { return nbrs_[a].count(b) > 0; }
  const std::set<VertexId>& nbrs(VertexId v) const { return nbrs_[v]; }
  EdgeId edge_between(VertexId a, VertexId b) const {
    return edge_id_.at({std::min(a, b), std::max(a, b)});
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::set<VertexId>> nbrs_;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_id_;
};

std::vector<VertexId> tops(const Adjacency& adj, VertexId v, VertexId u,
                           VertexId w) {
  std::vector<VertexId> out;
  for (VertexId x : adj.nbrs(u)) {
    if (x != v && adj.adjacent(x, w)) out.push_back(x);
  }
  return out;
}

bool chordless(const Adjacency& adj, VertexId v, VertexId u, VertexId x,
               VertexId w) {
  return adj.adjacent(v, u) && adj.adjacent(u, x) && adj.adjacent(x, w) &&
         adj.adjacent(w, v) && !adj.adjacent(v, x) && !adj.adjacent(u, w);
}

std::size_t common_count(const Adjacency& adj, VertexId a, VertexId b) {
  std::size_t count = 0;
  for (VertexId x : adj.nbrs(a)) count += adj.adjacent(x, b) ? 1 : 0;
  return count;
}

// Components of the graph whose vertices are the edges with member[e] set and
// whose arcs are the pairs of r. Non-members stay uncolored.
EdgeColoring closure_over(std::size_t m,
                          const std::set<std::pair<EdgeId, EdgeId>>& pairs,
                          const std::vector<char>& member) {
  std::vector<std::vector<EdgeId>> arcs(m);
  for (auto [e, f] : pairs) {
    arcs[e].push_back(f);
    arcs[f].push_back(e);
  }
  std::vector<std::uint32_t> raw(m, kUncolored);
  std::uint32_t next = 0;
  for (EdgeId start = 0; start < m; ++start) {
    if (!member[start] || raw[start] != kUncolored) continue;
    std::deque<EdgeId> queue{start};
    raw[start] = next;
    while (!queue.empty()) {
      EdgeId e = queue.front();
      queue.pop_front();
      for (EdgeId f : arcs[e]) {
        if (member[f] && raw[f] == kUncolored) {
          raw[f] = next;
          queue.push_back(f);
        }
      }
    }
    ++next;
  }
  return EdgeColoring::from_raw(raw);
}

}  // namespace

void EdgePairRelation::add(EdgeId e, EdgeId f) {
  if (e == f) return;
  pairs.emplace(std::min(e, f), std::max(e, f));
}

bool EdgePairRelation::contains(EdgeId e, EdgeId f) const {
  return e == f || pairs.count({std::min(e, f), std::max(e, f)}) > 0;
}

EdgePairRelation delta(const Graph& g, UniqueSquareRule rule) {
  Adjacency adj(g);
  EdgePairRelation r;
  r.num_edges = g.num_edges();

  // (i) adjacent edges e = vu, f = vw that do not span a unique chordless
  // square.
  for (VertexId v = 0; v < adj.size(); ++v) {
    for (VertexId u : adj.nbrs(v)) {
      for (VertexId w : adj.nbrs(v)) {
        if (w <= u) continue;
        auto x = tops(adj, v, u, w);
        bool unique_chordless =
            x.size() == 1 && chordless(adj, v, u, x[0], w);
        if (unique_chordless &&
            rule == UniqueSquareRule::kUniqueSquareAndTopVertex) {
          unique_chordless = common_count(adj, x[0], v) == 2;
        }
        if (!unique_chordless) {
          r.add(adj.edge_between(v, u), adj.edge_between(v, w));
        }
      }
    }
  }

  // (ii) opposite edges of a chordless square a-b-d-c-a: ab and cd.
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    VertexId a = g.edge(id).u;
    VertexId b = g.edge(id).v;
    for (VertexId c : adj.nbrs(a)) {
      if (c == b) continue;
      for (VertexId d : adj.nbrs(b)) {
        if (d == a || d == c || !adj.adjacent(c, d)) continue;
        if (chordless(adj, a, b, d, c)) r.add(id, adj.edge_between(c, d));
      }
    }
  }
  return r;
}

EdgeColoring transitive_closure(const EdgePairRelation& r) {
  return closure_over(r.num_edges, r.pairs,
                      std::vector<char>(r.num_edges, 1));
}

EdgePairRelation d_v(const Graph& g, VertexId v, UniqueSquareRule rule) {
  EdgePairRelation all = delta(g, rule);
  EdgePairRelation out;
  out.num_edges = all.num_edges;
  auto at_v = [&](EdgeId e) { return g.edge(e).u == v || g.edge(e).v == v; };
  for (auto [e, f] : all.pairs) {
    if (at_v(e) || at_v(f)) out.add(e, f);
  }
  return out;
}

std::vector<EdgeId> Psp::edges() const {
  std::vector<EdgeId> out(primal);
  out.insert(out.end(), non_primal.begin(), non_primal.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Psp::vertices(const Graph& g) const {
  std::set<VertexId> vs{center};
  for (EdgeId e : edges()) {
    vs.insert(g.edge(e).u);
    vs.insert(g.edge(e).v);
  }
  return {vs.begin(), vs.end()};
}

Psp psp(const Graph& g, VertexId v) {
  Adjacency adj(g);
  EdgeColoring closed = transitive_closure(d_v(g, v));

  Psp out;
  out.center = v;
  std::set<EdgeId> non_primal;
  for (VertexId u : adj.nbrs(v)) {
    out.primal.push_back(adj.edge_between(v, u));
    for (VertexId w : adj.nbrs(v)) {
      if (w <= u) continue;
      if (closed.class_of(adj.edge_between(v, u)) ==
          closed.class_of(adj.edge_between(v, w))) {
        continue;
      }
      for (VertexId x : tops(adj, v, u, w)) {
        if (chordless(adj, v, u, x, w)) {
          non_primal.insert(adj.edge_between(u, x));
          non_primal.insert(adj.edge_between(w, x));
        }
      }
    }
  }
  std::sort(out.primal.begin(), out.primal.end());
  out.non_primal.assign(non_primal.begin(), non_primal.end());
  return out;
}

EdgeColoring local_coloring(const Graph& g, VertexId v) {
  EdgeColoring closed = transitive_closure(d_v(g, v));
  std::vector<std::uint32_t> raw(g.num_edges(), kUncolored);
  for (EdgeId e : psp(g, v).edges()) raw[e] = closed.class_of(e);
  return EdgeColoring::from_raw(raw);
}

EdgeColoring global_coloring(const Graph& g, std::span<const VertexId> w) {
  std::vector<char> in_w(g.num_vertices(), 0);
  for (VertexId v : w) in_w[v] = 1;

  // Connectivity of the induced subgraph, checked by a plain search.
  if (!w.empty()) {
    Adjacency adj(g);
    std::vector<char> seen(g.num_vertices(), 0);
    std::deque<VertexId> queue{w[0]};
    seen[w[0]] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      VertexId a = queue.front();
      queue.pop_front();
      for (VertexId b : adj.nbrs(a)) {
        if (in_w[b] && !seen[b]) {
          seen[b] = 1;
          ++reached;
          queue.push_back(b);
        }
      }
    }
    std::size_t distinct = 0;
    for (char c : in_w) distinct += c ? 1 : 0;
    if (reached != distinct) {
      throw Error(ErrorCode::kDisconnectedW,
                  "vertex set does not induce a connected subgraph");
    }
  }

  std::set<std::pair<EdgeId, EdgeId>> pairs;
  std::vector<char> member(g.num_edges(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!in_w[v]) continue;
    for (const auto& cls : local_coloring(g, v).classes()) {
      for (EdgeId e : cls) member[e] = 1;
      for (std::size_t i = 1; i < cls.size(); ++i) {
        pairs.emplace(cls[0], cls[i]);
      }
    }
  }
  return closure_over(g.num_edges(), pairs, member);
}

EdgeColoring delta_star(const Graph& g, UniqueSquareRule rule) {
  return transitive_closure(delta(g, rule));
}

std::vector<VertexId> top_vertices(const Graph& g, VertexId v, VertexId u,
                                   VertexId w) {
  return tops(Adjacency(g), v, u, w);
}

bool is_chordless_square(const Graph& g, VertexId v, VertexId u, VertexId x,
                         VertexId w) {
  return chordless(Adjacency(g), v, u, x, w);
}

bool is_unique_top_vertex(const Graph& g, VertexId v, VertexId x) {
  return common_count(Adjacency(g), x, v) == 2;
}

std::vector<std::vector<std::size_t>> distances(const Graph& g) {
  Adjacency adj(g);
  const std::size_t n = g.num_vertices();
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kInf));
  for (VertexId s = 0; s < n; ++s) {
    std::deque<VertexId> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      VertexId a = queue.front();
      queue.pop_front();
      for (VertexId b : adj.nbrs(a)) {
        if (dist[s][b] == kInf) {
          dist[s][b] = dist[s][a] + 1;
          queue.push_back(b);
        }
      }
    }
  }
  return dist;
}

}  // namespace qprod::oracle
