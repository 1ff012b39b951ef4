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

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "qprod/cli.hpp"
#include "qprod/generators.hpp"

namespace qprod::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("qprod_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(const RunConfig& config) {
  std::ostringstream out, err;
  int status = run(config, out, err);
  return {status, out.str(), err.str()};
}

RunConfig config_for(const std::string& input, Mode mode = Mode::kDeltaStar) {
  RunConfig c;
  c.input = input;
  c.mode = mode;
  return c;
}

const TempDir& dir() {
  static TempDir d;
  return d;
}

std::string graph_file(const std::string& name, const Graph& g) {
  return dir().write(name, format_edge_list(g));
}

TEST_CASE("mode and format names") {
  CHECK(parse_mode("delta-star") == Mode::kDeltaStar);
  CHECK(parse_mode("parallel") == Mode::kParallel);
  CHECK_FALSE(parse_mode("fast").has_value());
  CHECK(parse_format("json-report") == Format::kJsonReport);
  CHECK_FALSE(parse_format("yaml").has_value());
  CHECK(to_string(Mode::kQuasi) == "quasi");
}

TEST_CASE("quasi mode on K_{2,3}") {
  auto path = graph_file("k23.txt", generators::complete_bipartite(2, 3));
  Result r = invoke(config_for(path, Mode::kQuasi));
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("class_count=1") != std::string::npos);
  CHECK(r.out.find("# is_quasi_product=false") != std::string::npos);
}

TEST_CASE("delta-star with oracle check on a square") {
  auto path = graph_file("c4.txt", generators::cycle(4));
  RunConfig c = config_for(path);
  c.oracle_check = true;
  Result r = invoke(c);
  CHECK(r.status == kExitOk);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "# mode=delta-star class_count=2 covered_edges=4\n"
        "class 0: 0-1, 2-3\n"
        "class 1: 1-2, 0-3\n");
}

TEST_CASE("psp mode on a star") {
  auto path = graph_file("star.txt", generators::star(4));
  RunConfig c = config_for(path, Mode::kPsp);
  c.root = 0;
  c.oracle_check = true;
  Result r = invoke(c);
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("class_count=1") != std::string::npos);
  CHECK(r.out.find("primal_edges=4 non_primal_edges=0") != std::string::npos);
}

TEST_CASE("original vertex ids are reported") {
  auto path = dir().write("sparse.txt", "# square\n100 7\n7 42\n42 5\n5 100\n");
  Result r = invoke(config_for(path));
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("class 0: 100-7, 42-5") != std::string::npos);
}

TEST_CASE("global mode reads the treated set") {
  auto g = graph_file("p4.txt", generators::path(4));
  auto w = dir().write("w.txt", "# first two\n0\n1\n");
  RunConfig c = config_for(g, Mode::kGlobal);
  c.w_set = w;
  c.oracle_check = true;
  Result r = invoke(c);
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("covered_edges=2") != std::string::npos);

  c.w_set = dir().write("w_bad.txt", "0 2\n");
  CHECK(invoke(c).status == kExitInputError);
}

TEST_CASE("parallel mode output is byte-identical to sequential") {
  auto g = graph_file("grid.txt", generators::grid(6, 6));
  std::string blocks;
  for (int half = 0; half < 2; ++half) {
    for (int v = 0; v < 36; ++v) {
      if ((v % 6 < 3) == (half == 0)) blocks += std::to_string(v) + " ";
    }
    blocks += "\n";
  }
  RunConfig par = config_for(g, Mode::kParallel);
  par.partition = dir().write("halves.txt", blocks);
  Result seq = invoke(config_for(g));
  for (std::size_t workers : {1u, 2u, 8u}) {
    par.workers = workers;
    Result r = invoke(par);
    CHECK(r.status == kExitOk);
    CHECK(r.out.substr(r.out.find('\n')) == seq.out.substr(seq.out.find('\n')));
  }
  par.workers = 2;
  CHECK(invoke(par).out == invoke(par).out);
}

TEST_CASE("input and validation errors exit with status 2") {
  RunConfig missing = config_for(dir().write("x.txt", "") + ".nope");
  Result r = invoke(missing);
  CHECK(r.status == kExitInputError);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  CHECK(invoke(config_for(dir().write("dup.txt", "0 1\n1 0\n"))).status ==
        kExitInputError);
  CHECK(invoke(config_for(dir().write("bad.txt", "0 1 2\n"))).status ==
        kExitInputError);
  Result disc = invoke(config_for(dir().write("disc.txt", "0 1\n2 3\n")));
  CHECK(disc.err.find("Disconnected") != std::string::npos);

  auto c4 = graph_file("c4b.txt", generators::cycle(4));
  RunConfig no_partition = config_for(c4, Mode::kParallel);
  CHECK(invoke(no_partition).status == kExitInputError);
  RunConfig stray = config_for(c4);
  stray.partition = "p.txt";
  CHECK(invoke(stray).status == kExitInputError);
  RunConfig workers = config_for(c4);
  workers.workers = 4;
  CHECK(invoke(workers).status == kExitInputError);
  RunConfig root = config_for(c4);
  root.root = 99;
  CHECK(invoke(root).status == kExitInputError);
  RunConfig overlap = config_for(c4, Mode::kParallel);
  overlap.partition = dir().write("overlap.txt", "0 1 2\n2 3\n");
  CHECK(invoke(overlap).err.find("Overlap") != std::string::npos);
}

TEST_CASE("dot output") {
  Graph c4 = generators::cycle(4);
  std::vector<std::uint32_t> raw{0, 1, 0, 1};
  std::string dot = emit_dot(c4, EdgeColoring::from_raw(raw));
  CHECK(dot.rfind("graph qprod {\n", 0) == 0);
  CHECK(dot.find("0 -- 1 [colorindex=0") != std::string::npos);
  CHECK(dot.find("1 -- 2 [colorindex=1") != std::string::npos);
  CHECK(dot.find("dashed") == std::string::npos);
  CHECK(dot == emit_dot(c4, EdgeColoring::from_raw(raw)));

  std::vector<std::uint32_t> none(4, kUncolored);
  std::string empty = emit_dot(c4, EdgeColoring::from_raw(none));
  std::size_t dashed = 0;
  for (auto at = empty.find("style=dashed"); at != std::string::npos;
       at = empty.find("style=dashed", at + 1)) {
    ++dashed;
  }
  CHECK(dashed == 4);

  Graph p3 = generators::path(3);
  std::vector<std::uint32_t> one{5, 5};
  std::string uniform = emit_dot(p3, EdgeColoring::from_raw(one));
  CHECK(uniform.find("colorindex=1") == std::string::npos);
  CHECK(uniform.find("colorindex=0") != uniform.rfind("colorindex=0"));
}

TEST_CASE("json report") {
  auto path = graph_file("q3.txt", generators::hypercube(3));
  RunConfig c = config_for(path, Mode::kQuasi);
  c.format = Format::kJsonReport;
  Result r = invoke(c);
  REQUIRE(r.status == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["mode"] == "quasi");
  CHECK(j["class_count"] == 3);
  CHECK(j["class_sizes"] == nlohmann::json::array({4, 4, 4}));
  CHECK(j["is_quasi_product"] == true);
  CHECK(j["covered_edges"] == 12);
  CHECK(j["classes"].size() == 3);
  CHECK_FALSE(j.contains("timing"));

  c.stats = true;
  Result timed = invoke(c);
  auto t = nlohmann::json::parse(timed.out);
  CHECK(t["timing"]["milliseconds"].get<double>() >= 0.0);
  CHECK(timed.err.find("merge_bound_ok=1") != std::string::npos);

  RunConfig psp = config_for(path, Mode::kPsp);
  psp.format = Format::kJsonReport;
  auto p = nlohmann::json::parse(invoke(psp).out);
  CHECK(p["is_quasi_product"].is_null());
  CHECK(p["psp"]["primal_edges"] == 3);
  CHECK(p["psp"]["non_primal_edges"] == 6);
}

TEST_CASE("generate builds products") {
  Graph g = generate({"path:3", "cycle:4"});
  CHECK(g.num_vertices() == 12);
  CHECK(g.num_edges() == 20);
  CHECK_THROWS(generate({}));
  std::string text = format_edge_list(generators::path(3));
  CHECK(text == "# n=3 m=2\n0 1\n1 2\n");
}

TEST_CASE("the executable") {
  auto path = graph_file("exe_c4.txt", generators::cycle(4));
  std::string cmd = std::string(QPROD_CLI_PATH) + " --input " + path +
                    " --mode quasi --oracle-check > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  std::string bad = std::string(QPROD_CLI_PATH) + " --input " + path +
                    " --mode nonsense > /dev/null 2>&1";
  int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == kExitInputError);
  std::string gen = std::string(QPROD_CLI_PATH) +
                    " generate grid:2,2 > " + path + ".gen 2>&1";
  CHECK(std::system(gen.c_str()) == 0);
  std::ifstream in(path + ".gen");
  std::string first;
  std::getline(in, first);
  CHECK(first == "# n=4 m=4");
}

}  // namespace
}  // namespace qprod::cli
