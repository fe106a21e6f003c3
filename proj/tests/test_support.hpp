#pragma once

#include <random>
#include <vector>

#include "hypercolor/constructions.hpp"
#include "hypercolor/hypergraph.hpp"

namespace ts {

using hypercolor::Hypergraph;

inline Hypergraph hg(int n, std::vector<std::vector<int>> edges, int r_max = 3) {
  return Hypergraph(n, std::move(edges), r_max);
}

// seeded stream of small random instances for property tests
struct InstanceGen {
  std::mt19937_64 rng;
  explicit InstanceGen(unsigned long long seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Hypergraph next(int max_n, int max_m, int r_max, bool uniform) {
    int n = pick(r_max, max_n);
    long long avail = 0;
    if (uniform) {
      long long c = 1;
      for (int i = 0; i < r_max; ++i) c = c * (n - i) / (i + 1);
      avail = c;
    } else {
      for (int r = 2; r <= r_max; ++r) {
        long long c = 1;
        for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
        avail += c;
      }
    }
    int m = pick(0, static_cast<int>(std::min<long long>(max_m, avail)));
    return hypercolor::random_hypergraph(n, m, r_max, uniform, rng());
  }
};

// every {2,3}-hypergraph on exactly n vertices, as subsets of the
// candidate edge universe; feasible for n <= 4 (2^10 instances)
template <typename F>
void for_all_hypergraphs(int n, F&& visit) {
  std::vector<std::vector<int>> universe;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      universe.push_back({a, b});
      for (int c = b + 1; c < n; ++c) universe.push_back({a, b, c});
    }
  for (unsigned long long mask = 0; mask < (1ull << universe.size()); ++mask) {
    std::vector<std::vector<int>> edges;
    for (size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1) edges.push_back(universe[i]);
    visit(Hypergraph(n, std::move(edges), 3));
  }
}

}  // namespace ts
