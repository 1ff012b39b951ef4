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

// Acceptance run: one PASS/FAIL line per criterion. The exit status is zero
// iff the set of failing criteria equals the set given with --expect-fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graph_corpus.hpp"
#include "psp_checks.hpp"
#include "qprod/cli.hpp"
#include "qprod/delta.hpp"
#include "qprod/generators.hpp"
#include "qprod/oracle.hpp"
#include "qprod/parallel.hpp"

namespace qprod {
namespace {

using testing::Rng;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Relabel-bound bookkeeping shared by criteria 1 to 6.
struct MergeAudit {
  std::size_t runs = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;

  void record(const RunStats& s) {
    ++runs;
    if (!s.merge_bound_ok) ++violations;
    if (s.psp.local_bound_violations) ++violations;
    if (s.global_colors > 0) {
      worst_ratio =
          std::max(worst_ratio, static_cast<double>(s.global_relabels) /
                                    relabel_bound(s.global_colors));
    }
  }
  void record(const ParallelStats& s) {
    ++runs;
    if (!s.merge_bound_ok) ++violations;
    if (s.unified_colors > 0) {
      worst_ratio =
          std::max(worst_ratio, static_cast<double>(s.unified_relabels) /
                                    relabel_bound(s.unified_colors));
    }
  }
};

MergeAudit audit;
std::size_t fresh_colors = 0;

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> v(g.num_vertices());
  std::iota(v.begin(), v.end(), VertexId{0});
  return v;
}

GlobalColoringResult delta_star(const Graph& g, VertexId v0 = 0) {
  auto r = compute_delta_star(g, v0);
  audit.record(r.stats);
  fresh_colors += r.stats.psp.fresh_global_colors;
  return r;
}

std::string count_text(std::size_t a, std::size_t b) {
  return std::to_string(a) + "/" + std::to_string(b);
}

Verdict exhaustive_oracle_equivalence() {
  std::size_t graphs = 0;
  std::size_t mismatches = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    if (delta_star(g).coloring != oracle::delta_star(g)) ++mismatches;
  };
  std::size_t labelled = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    labelled += testing::for_each_connected_labelled(n, check);
  }
  std::size_t seven = testing::for_each_connected_seven(check);

  Rng rng(1001);
  std::size_t random = 0;
  for (std::size_t i = 0; i < 5000; ++i) {
    std::size_t n = 2 + i % 11;
    std::size_t m = 0;
    switch (i / 11 % 3) {
      case 0: m = n - 1; break;
      case 1: m = (3 * n) / 2; break;
      default: m = 3 * n; break;
    }
    check(testing::random_connected(rng, n, m));
    ++random;
  }
  return {mismatches == 0,
          "labelled n<=6: " + std::to_string(labelled) +
              ", all classes n=7: " + std::to_string(seven) +
              ", random n<=12: " + std::to_string(random) +
              ", mismatches " + count_text(mismatches, graphs)};
}

Verdict treated_set_equivalence() {
  Rng rng(2002);
  std::size_t mismatches = 0;
  std::size_t full_mismatches = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    std::size_t n = 1 + i % 10;
    std::size_t max_m = n * (n - 1) / 2;
    std::uniform_int_distribution<std::size_t> m_dist(n - 1, std::max(n - 1, max_m));
    Graph g = testing::random_connected(rng, n, m_dist(rng));
    auto w = testing::random_connected_subset(rng, g);
    std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
    auto r = compute_global_coloring(g, w, w[pick(rng)]);
    audit.record(r.stats);
    fresh_colors += r.stats.psp.fresh_global_colors;
    if (r.coloring != oracle::global_coloring(g, w)) ++mismatches;

    auto all = all_vertices(g);
    auto full = compute_global_coloring(g, all, 0);
    audit.record(full.stats);
    if (full.coloring != oracle::global_coloring(g, all) ||
        full.coloring != oracle::delta_star(g)) {
      ++full_mismatches;
    }
  }
  return {mismatches == 0 && full_mismatches == 0,
          "random W mismatches " + count_text(mismatches, 500) +
              ", W=V mismatches " + count_text(full_mismatches, 500)};
}

Verdict complete_bipartite_example() {
  Graph k23 = generators::complete_bipartite(2, 3);
  auto r = delta_star(k23);
  auto report = classify_quasi_product(r);
  bool oracle_agrees = oracle::delta_star(k23).class_count() == 1;
  return {r.class_count == 1 && !report.is_quasi_product && oracle_agrees,
          "classes " + std::to_string(r.class_count) + ", is_quasi_product " +
              (report.is_quasi_product ? "true" : "false")};
}

Verdict quasi_product_positives() {
  struct Golden {
    std::string name;
    Graph g;
    std::size_t classes;
  };
  std::vector<Golden> goldens;
  goldens.push_back({"C4", generators::cycle(4), 2});
  goldens.push_back({"Q3", generators::hypercube(3), 3});
  for (std::size_t k = 2; k <= 8; ++k) {
    goldens.push_back({"grid " + std::to_string(k) + "x" + std::to_string(k),
                       generators::grid(k, k), 2});
  }
  std::string failures;
  for (const auto& gold : goldens) {
    std::size_t expected = oracle::delta_star(gold.g).class_count();
    auto r = delta_star(gold.g);
    auto report = classify_quasi_product(r);
    if (expected != gold.classes || r.class_count != gold.classes ||
        !report.is_quasi_product) {
      failures += " " + gold.name;
    }
  }
  return {failures.empty(), failures.empty()
                                ? "C4=2, Q3=3, grids 2x2..8x8=2"
                                : "wrong:" + failures};
}

Verdict psp_structure() {
  Rng rng(5005);
  std::size_t centers = 0;
  std::size_t opposite = 0, cross_class = 0, meeting = 0, iso_graph = 0,
              iso_star = 0;
  std::size_t graphs_iso_graph = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    std::size_t n = 1 + i % 10;
    std::size_t max_m = n * (n - 1) / 2;
    std::uniform_int_distribution<std::size_t> m_dist(n - 1, std::max(n - 1, max_m));
    Graph g = testing::random_connected(rng, n, m_dist(rng));
    bool graph_iso_bad = false;
    for (VertexId v = 0; v < n; ++v) {
      ++centers;
      opposite += testing::non_primal_opposite_violations(g, oracle::psp(g, v));
      cross_class += testing::cross_class_square_violations(g, v);
      std::size_t bad = testing::isometry_in_graph_violations(g, v);
      iso_graph += bad;
      graph_iso_bad = graph_iso_bad || bad > 0;
      iso_star += testing::isometry_in_star_product_violations(g, v);
    }
    if (graph_iso_bad) ++graphs_iso_graph;
    auto w = testing::random_connected_subset(rng, g);
    meeting += testing::class_meeting_violations(g, w, oracle::global_coloring(g, w));
    auto all = all_vertices(g);
    meeting += testing::class_meeting_violations(g, all, oracle::delta_star(g));
  }
  bool pass = opposite == 0 && cross_class == 0 && meeting == 0 && iso_graph == 0;
  return {pass,
          "centers " + std::to_string(centers) +
              ", opposite-edge violations " + std::to_string(opposite) +
              ", cross-class square violations " + std::to_string(cross_class) +
              ", class-meeting violations " + std::to_string(meeting) +
              ", distance pairs differing from g " + std::to_string(iso_graph) +
              " (in " + std::to_string(graphs_iso_graph) + " graphs)" +
              ", distance pairs differing from the star product " +
              std::to_string(iso_star)};
}

Verdict parallel_equivalence() {
  Rng rng(6006);
  std::size_t runs = 0, mismatches = 0, report_mismatches = 0;
  std::size_t stack_insufficient = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    std::size_t n = 4 + i % 9;
    std::size_t max_m = n * (n - 1) / 2;
    std::uniform_int_distribution<std::size_t> m_dist(n - 1, std::min(max_m, 3 * n));
    Graph g = testing::random_connected(rng, n, m_dist(rng));
    std::uniform_int_distribution<std::size_t> k_dist(2, 4);
    Partition p{testing::random_connected_partition(rng, g, k_dist(rng))};
    auto sequential = delta_star(g);
    std::string expected = cli::format_classes(g, sequential.coloring);
    for (std::size_t workers : {1u, 2u, 8u}) {
      ++runs;
      ParallelStats stats;
      auto r = compute_delta_star_parallel(g, p, workers, &stats);
      audit.record(r.stats);
      audit.record(stats);
      if (!stats.stack_merge_sufficient) ++stack_insufficient;
      if (r.coloring != sequential.coloring) ++mismatches;
      if (cli::format_classes(g, r.coloring) != expected) ++report_mismatches;
    }
  }
  return {mismatches == 0 && report_mismatches == 0,
          "partition mismatches " + count_text(mismatches, runs) +
              ", report mismatches " + count_text(report_mismatches, runs) +
              ", runs where boundary stacks alone would not suffice " +
              std::to_string(stack_insufficient)};
}

Verdict merge_cost_bound() {
  std::ostringstream ratio;
  ratio.precision(3);
  ratio << audit.worst_ratio;
  return {audit.violations == 0 && fresh_colors == 0,
          "audited runs " + std::to_string(audit.runs) + ", bound violations " +
              std::to_string(audit.violations) +
              ", worst relabels/bound " + ratio.str() +
              ", fresh global colors " + std::to_string(fresh_colors)};
}

Verdict grid_scaling() {
  using Clock = std::chrono::steady_clock;
  std::vector<std::size_t> sides{16, 32, 64, 128};
  std::vector<double> per_run;
  double full_run = 0.0;
  bool correct = true;
  for (std::size_t k : sides) {
    Graph g = generators::grid(k, k);
    double best = 1e300;
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::size_t reps = 0;
      auto start = Clock::now();
      double elapsed = 0.0;
      do {
        auto r = compute_delta_star(g);
        correct = correct && r.class_count == 2;
        ++reps;
        elapsed = std::chrono::duration<double>(Clock::now() - start).count();
      } while (elapsed < 0.05);
      best = std::min(best, elapsed / static_cast<double>(reps));
      if (k == sides.back()) full_run = std::max(full_run, elapsed / reps);
    }
    per_run.push_back(best);
  }
  bool pass = correct && full_run < 10.0;
  std::ostringstream detail;
  detail.precision(3);
  for (std::size_t i = 0; i < sides.size(); ++i) {
    detail << (i ? ", " : "") << sides[i] << "^2 " << per_run[i] * 1e3 << " ms";
    if (i > 0) {
      double ratio = per_run[i] / per_run[i - 1];
      detail << " (x" << ratio << ")";
      pass = pass && ratio <= 6.0;
    }
  }
  return {pass, detail.str()};
}

Verdict product_containment() {
  Rng rng(9009);
  std::size_t violations = 0;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    std::uniform_int_distribution<std::size_t> n_dist(2, 6);
    auto factor = [&] {
      std::size_t n = n_dist(rng);
      std::uniform_int_distribution<std::size_t> m_dist(n - 1, n * (n - 1) / 2);
      return testing::random_connected(rng, n, m_dist(rng));
    };
    Graph a = factor();
    Graph b = factor();
    ProductGraph p = cartesian_product(a, b);
    auto r = delta_star(p.graph);
    for (EdgeId e = 0; e < p.graph.num_edges(); ++e) {
      ++edges;
      if (p.factor_of_edge[e] != p.factor_of_edge[r.coloring.class_of(e)]) {
        ++violations;
      }
    }
  }
  return {violations == 0, "edges outside their factor's class " +
                               count_text(violations, edges)};
}

}  // namespace
}  // namespace qprod

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail,
                 "Criteria known to fail; they do not affect the exit status")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    std::function<qprod::Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exhaustive oracle equivalence", qprod::exhaustive_oracle_equivalence},
      {2, "treated-set coloring equals the oracle", qprod::treated_set_equivalence},
      {3, "K_{2,3} has one class", qprod::complete_bipartite_example},
      {4, "quasi product positives", qprod::quasi_product_positives},
      {5, "partial star product structure", qprod::psp_structure},
      {6, "parallel equals sequential", qprod::parallel_equivalence},
      {7, "merge relabel bound", qprod::merge_cost_bound},
      {8, "grid scaling", qprod::grid_scaling},
      {9, "delta* within product colors", qprod::product_containment},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    qprod::Verdict v = c.run();
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (!v.pass) failed.insert(c.id);
    std::printf("criterion %d: %s  %s: %s [%.1fs]\n", c.id,
                v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu of %zu criteria passed", criteria.size() - failed.size(),
              criteria.size());
  if (!expected.empty()) {
    std::printf("; expected to fail:");
    for (int id : expected) std::printf(" %d", id);
  }
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
