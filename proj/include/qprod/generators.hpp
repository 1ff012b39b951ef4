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

#include <string_view>

#include "qprod/graph.hpp"

// Constructors for standard graph families.
namespace qprod::generators {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,leaves}; the center is vertex 0.
Graph star(std::size_t leaves);
Graph complete(std::size_t n);
/// K_{a,b}; the first part is [0, a).
Graph complete_bipartite(std::size_t a, std::size_t b);
/// rows x cols grid, vertex (r, c) has index r * cols + c.
Graph grid(std::size_t rows, std::size_t cols);
Graph hypercube(std::size_t dim);

/// Parses "name:a[,b]" for name in path, cycle, star, complete, bipartite,
/// grid, hypercube, e.g. "cycle:4" or "grid:8,8".
Graph from_spec(std::string_view spec);

}  // namespace qprod::generators
