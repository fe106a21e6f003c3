#pragma once

#include <chrono>
#include <vector>

#include "hypercolor/constructions.hpp"
#include "hypercolor/dfs.hpp"

namespace hypercolor {

struct BenchRow {
  int copies = 0;
  long long n = 0;
  long long m = 0;
  long long size = 0;  // n + m
  int palette = 0;
  double millis = 0;
};

// Disjoint unions of complete 3-graphs on k vertices, sized so that
// n + m lands near each target; the coloring pipeline is timed, best of
// `reps` runs, generation excluded.
inline std::vector<BenchRow> bench_disjoint_cliques(int k, const std::vector<long long>& targets,
                                                    ColorMode mode = ColorMode::strong,
                                                    int reps = 3) {
  long long per_block = k;
  {
    long long c = 1;
    for (int i = 0; i < 3; ++i) c = c * (k - i) / (i + 1);
    per_block += c;
  }
  std::vector<BenchRow> rows;
  for (long long target : targets) {
    int copies = static_cast<int>(std::max<long long>(1, target / per_block));
    std::vector<Hypergraph> parts(copies, complete_r_graph(k, 3));
    Hypergraph h = disjoint_union(parts);
    BenchRow row;
    row.copies = copies;
    row.n = h.n;
    row.m = h.edge_count();
    row.size = row.n + row.m;
    double best = -1;
    for (int rep = 0; rep < reps; ++rep) {
      auto start = std::chrono::steady_clock::now();
      PipelineResult res = color_bpk_free(h, k, mode);
      double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      if (!res.colored()) throw std::logic_error("bench: pipeline failed on a clique family");
      row.palette = res.coloring->palette_size;
      if (best < 0 || ms < best) best = ms;
    }
    row.millis = best;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hypercolor
