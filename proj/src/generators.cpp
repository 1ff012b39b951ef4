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

#include "qprod/generators.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "qprod/error.hpp"

namespace qprod::generators {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

Graph path(std::size_t n) {
  EdgeList edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  }
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i),
                       static_cast<VertexId>((i + 1) % n));
  }
  return Graph(n, edges);
}

Graph star(std::size_t leaves) {
  EdgeList edges;
  for (std::size_t i = 1; i <= leaves; ++i) {
    edges.emplace_back(0, static_cast<VertexId>(i));
  }
  return Graph(leaves + 1, edges);
}

Graph complete(std::size_t n) {
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  EdgeList edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      edges.emplace_back(static_cast<VertexId>(i),
                         static_cast<VertexId>(a + j));
    }
  }
  return Graph(a + b, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
  EdgeList edges;
  auto at = [cols](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
    }
  }
  return Graph(rows * cols, edges);
}

Graph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  EdgeList edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < dim; ++bit) {
      std::size_t u = v ^ (std::size_t{1} << bit);
      if (v < u) {
        edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(u));
      }
    }
  }
  return Graph(n, edges);
}

namespace {

std::vector<std::size_t> parse_args(std::string_view args,
                                    std::string_view spec) {
  std::vector<std::size_t> out;
  while (!args.empty()) {
    auto comma = args.find(',');
    auto token = args.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad generator spec '" + std::string(spec) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph from_spec(std::string_view spec) {
  auto colon = spec.find(':');
  auto name = spec.substr(0, colon);
  auto args = colon == std::string_view::npos
                  ? std::vector<std::size_t>{}
                  : parse_args(spec.substr(colon + 1), spec);
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator '" + std::string(name) + "' takes " +
                      std::to_string(count) + " argument(s)");
    }
  };

  if (name == "path") { need(1); return path(args[0]); }
  if (name == "cycle") { need(1); return cycle(args[0]); }
  if (name == "star") { need(1); return star(args[0]); }
  if (name == "complete") { need(1); return complete(args[0]); }
  if (name == "bipartite") { need(2); return complete_bipartite(args[0], args[1]); }
  if (name == "grid") { need(2); return grid(args[0], args[1]); }
  if (name == "hypercube") { need(1); return hypercube(args[0]); }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown graph family '" + std::string(name) + "'");
}

}  // namespace qprod::generators
