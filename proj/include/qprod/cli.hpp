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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qprod/edge_coloring.hpp"
#include "qprod/graph.hpp"

namespace qprod::cli {

enum class Mode { kDeltaStar, kPsp, kGlobal, kQuasi, kParallel };
enum class Format { kClasses, kDot, kJsonReport };

std::optional<Mode> parse_mode(std::string_view text);
std::optional<Format> parse_format(std::string_view text);
std::string_view to_string(Mode mode);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOracleMismatch = 3;

struct RunConfig {
  std::string input;  // "-" reads standard input
  Mode mode = Mode::kDeltaStar;
  std::optional<std::uint64_t> root;  // original vertex id
  std::optional<std::string> w_set;
  std::optional<std::string> partition;
  std::size_t workers = 1;
  Format format = Format::kClasses;
  bool oracle_check = false;
  bool stats = false;
};

/// Mode-specific option checks; throws Error(kInvalidArgument).
void validate(const RunConfig& config);

/// Runs one command. The report goes to out, diagnostics and --stats output
/// to err. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Graphviz rendering: one color index per class, uncolored edges dashed.
std::string emit_dot(const Graph& g, const EdgeColoring& coloring);

/// "class <label>: u-v, u-v, ..." lines with original vertex ids.
std::string format_classes(const Graph& g, const EdgeColoring& coloring);

/// Edge list text of g using its vertex labels.
std::string format_edge_list(const Graph& g);

/// Builds the graph for `generate`: a single family spec, or the Cartesian
/// product of several, left to right.
Graph generate(const std::vector<std::string>& specs);

}  // namespace qprod::cli
