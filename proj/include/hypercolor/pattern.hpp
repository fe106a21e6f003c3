#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypercolor {

// Small graph used as a pattern for Berge containment.  Forests allowed,
// connectivity not required.  Edges are normalized to (min,max) and kept
// in insertion order; cycle_pattern(2) is the one place where a parallel
// pair appears (two hyperedges sharing two vertices).
struct PatternGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  PatternGraph() = default;
  PatternGraph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n || u == v)
        throw std::invalid_argument("pattern: bad edge endpoint");
    }
  }

  int edge_count() const { return static_cast<int>(edges.size()); }

  int max_degree() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    int d = 0;
    for (int x : deg) d = std::max(d, x);
    return d;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

  bool is_forest() const {
    // union-find cycle check
    std::vector<int> par(n);
    for (int i = 0; i < n; ++i) par[i] = i;
    auto find = [&](int x) {
      while (par[x] != x) x = par[x] = par[par[x]];
      return x;
    };
    for (auto [u, v] : edges) {
      int a = find(u), b = find(v);
      if (a == b) return false;
      par[a] = b;
    }
    return true;
  }
};

// Path with k edges, vertices 0..k in path order.
inline PatternGraph path_pattern(int k) {
  if (k < 1) throw std::invalid_argument("path: k must be >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < k; ++i) es.emplace_back(i, i + 1);
  return PatternGraph(k + 1, std::move(es));
}

// Cycle with k edges.  k = 2 is the degenerate Berge cycle: two distinct
// hyperedges sharing the same pair.
inline PatternGraph cycle_pattern(int k) {
  if (k < 2) throw std::invalid_argument("cycle: k must be >= 2");
  PatternGraph p;
  p.n = k == 2 ? 2 : k;
  if (k == 2) {
    p.edges = {{0, 1}, {0, 1}};
    return p;
  }
  for (int i = 0; i < k; ++i) p.edges.emplace_back(i, (i + 1) % k);
  for (auto& [u, v] : p.edges)
    if (u > v) std::swap(u, v);
  return p;
}

// Star with k edges, center 0.
inline PatternGraph star_pattern(int k) {
  if (k < 1) throw std::invalid_argument("star: k must be >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= k; ++i) es.emplace_back(0, i);
  return PatternGraph(k + 1, std::move(es));
}

// Spider with k legs of length two: center 0, leg i uses vertices
// 2i-1 (knee) and 2i (foot).
inline PatternGraph spider_pattern(int k) {
  if (k < 1) throw std::invalid_argument("spider: k must be >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= k; ++i) {
    es.emplace_back(0, 2 * i - 1);
    es.emplace_back(2 * i - 1, 2 * i);
  }
  return PatternGraph(2 * k + 1, std::move(es));
}

// Double star DS_{t,k}: an S_{t+1} and an S_{k+1} sharing one edge.
// Centers 0 and 1; t extra leaves on 0, k extra leaves on 1.
// t+k+1 edges on t+k+2 vertices.
inline PatternGraph dstar_pattern(int t, int k) {
  if (t < 1 || k < 1) throw std::invalid_argument("dstar: parameters must be >= 1");
  std::vector<std::pair<int, int>> es;
  es.emplace_back(0, 1);
  int next = 2;
  for (int i = 0; i < t; ++i) es.emplace_back(0, next++);
  for (int i = 0; i < k; ++i) es.emplace_back(1, next++);
  return PatternGraph(t + k + 2, std::move(es));
}

// Broom B_{t,k}: an endpoint of a path with t edges identified with the
// center of a star with k edges.  t+k edges on t+k+1 vertices.  Vertex 0
// is the shared center, 1..t the path, t+1..t+k the star leaves.
inline PatternGraph broom_pattern(int t, int k) {
  if (t < 2 || k < 2) throw std::invalid_argument("broom: parameters must be >= 2");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < t; ++i) es.emplace_back(i, i + 1);
  for (int i = 1; i <= k; ++i) es.emplace_back(0, t + i);
  return PatternGraph(t + k + 1, std::move(es));
}

}  // namespace hypercolor
