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

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qprod/cli.hpp"
#include "qprod/error.hpp"

int main(int argc, char** argv) {
  using namespace qprod::cli;

  CLI::App app{"Edge relation delta* and quasi Cartesian product recognition"};
  app.require_subcommand(0, 1);

  RunConfig config;
  std::string mode = "delta-star";
  std::string format = "classes";
  std::string w_set;
  std::string partition;
  std::uint64_t root = 0;

  app.add_option("--input", config.input, "Edge list file, '-' for stdin");
  app.add_option("--mode", mode, "delta-star | psp | global | quasi | parallel")
      ->check(CLI::IsMember({"delta-star", "psp", "global", "quasi", "parallel"}));
  auto* root_opt = app.add_option("--root", root, "Root / PSP center (original id)");
  auto* w_opt = app.add_option("--w-set", w_set, "Vertex set file for --mode global");
  auto* part_opt = app.add_option("--partition", partition, "Partition file for --mode parallel");
  app.add_option("--workers", config.workers, "Worker threads for --mode parallel");
  app.add_option("--format", format, "classes | dot | json-report")
      ->check(CLI::IsMember({"classes", "dot", "json-report"}));
  app.add_flag("--oracle-check", config.oracle_check,
               "Compare against the brute-force oracle (exit 3 on mismatch)");
  app.add_flag("--stats", config.stats, "Print timing and work counters to stderr");

  std::vector<std::string> specs;
  auto* gen = app.add_subcommand(
      "generate", "Print a generated graph; several specs form their Cartesian product");
  gen->add_option("specs", specs,
                  "family:args, e.g. cycle:4 grid:8,8 hypercube:3 path:3")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (*gen) {
    try {
      std::cout << format_edge_list(generate(specs));
      return kExitOk;
    } catch (const qprod::Error& e) {
      std::cerr << "error: " << qprod::to_string(e.code()) << ": " << e.what() << '\n';
      return kExitInputError;
    }
  }

  config.mode = *parse_mode(mode);
  config.format = *parse_format(format);
  if (*root_opt) config.root = root;
  if (*w_opt) config.w_set = w_set;
  if (*part_opt) config.partition = partition;
  return run(config, std::cout, std::cerr);
}
