#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercolor/errors.hpp"
#include "hypercolor/hypergraph.hpp"

namespace hypercolor {

enum class ColorMode { strong, weak };

inline const char* to_string(ColorMode m) { return m == ColorMode::strong ? "strong" : "weak"; }

// Total vertex coloring with 0-based contiguous palette indices.
struct Coloring {
  std::vector<int> colors;
  ColorMode mode = ColorMode::strong;
  int palette_size = 0;

  static Coloring of(std::vector<int> colors, ColorMode mode) {
    Coloring c;
    c.colors = std::move(colors);
    c.mode = mode;
    c.palette_size = 0;
    for (int x : c.colors) c.palette_size = std::max(c.palette_size, x + 1);
    return c;
  }
};

struct ValidationResult {
  bool ok = true;
  int violating_edge = -1;  // first offending hyperedge when !ok
};

// strong: every hyperedge rainbow; weak: no hyperedge monochromatic.
inline ValidationResult validate(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != h.n)
    throw std::invalid_argument("validate: coloring is not total on the vertex set");
  for (int x : c.colors)
    if (x < 0) throw std::invalid_argument("validate: partial coloring (negative color)");
  for (int ei = 0; ei < h.edge_count(); ++ei) {
    const auto& e = h.edges[ei];
    if (c.mode == ColorMode::strong) {
      std::vector<int> cs;
      for (int v : e) cs.push_back(c.colors[v]);
      std::sort(cs.begin(), cs.end());
      if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return {false, ei};
    } else {
      bool mono = true;
      for (int v : e)
        if (c.colors[v] != c.colors[e[0]]) {
          mono = false;
          break;
        }
      if (mono) return {false, ei};
    }
  }
  return {};
}

// Raised by peel_color_strong when peeling stalls: the residual core has
// minimum d^N at or above the threshold, so it must contain the Berge
// pattern the threshold was derived from; the caller can run a detector
// on it for a witness.
struct NonemptyCoreError : std::runtime_error {
  Hypergraph core;
  std::vector<int> core_ids;
  NonemptyCoreError(Hypergraph core_, std::vector<int> ids)
      : std::runtime_error("peel: nonempty core of " + std::to_string(core_.n) + " vertices"),
        core(std::move(core_)), core_ids(std::move(ids)) {}
};

struct PaletteExceededError : std::runtime_error {
  PaletteExceededError() : std::runtime_error("coloring ran out of palette colors") {}
};

struct InvalidColoringError : std::runtime_error {
  int violating_edge;
  explicit InvalidColoringError(int e)
      : std::runtime_error("coloring violates hyperedge " + std::to_string(e)),
        violating_edge(e) {}
};

namespace detail {

struct GraphColoring {
  int chi = 0;
  std::vector<int> colors;
};

// Exact chromatic number of a graph: greedy clique lower bound, DSATUR
// greedy upper bound, then a DSATUR-ordered decision search per palette
// size with the clique precolored.
inline GraphColoring exact_graph_chromatic(const std::vector<std::vector<int>>& adj,
                                           long long node_budget = 50'000'000) {
  int n = static_cast<int>(adj.size());
  GraphColoring out;
  out.colors.assign(n, 0);
  if (n == 0) return out;

  std::vector<int> by_degree(n);
  for (int i = 0; i < n; ++i) by_degree[i] = i;
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
    return a < b;
  });

  auto adjacent = [&](int u, int v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  };

  std::vector<int> clique;
  for (int v : by_degree) {
    bool ok = true;
    for (int u : clique)
      if (!adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }

  auto dsatur_greedy = [&]() {
    std::vector<int> col(n, -1);
    std::vector<std::set<int>> sat(n);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (col[v] != -1) continue;
        if (best == -1 || sat[v].size() > sat[best].size() ||
            (sat[v].size() == sat[best].size() && adj[v].size() > adj[best].size()))
          best = v;
      }
      int c = 0;
      while (sat[best].count(c)) ++c;
      col[best] = c;
      for (int u : adj[best])
        if (col[u] == -1) sat[u].insert(c);
    }
    return col;
  };
  std::vector<int> greedy = dsatur_greedy();
  int ub = 0;
  for (int c : greedy) ub = std::max(ub, c + 1);
  int lb = std::max<int>(1, clique.size());

  long long nodes = node_budget;
  auto decide = [&](int t, std::vector<int>& solution) -> bool {
    if (static_cast<int>(clique.size()) > t) return false;
    std::vector<int> col(n, -1);
    std::vector<std::vector<int>> satcnt(n, std::vector<int>(t, 0));
    std::vector<int> satdeg(n, 0);
    int colored = 0;
    std::function<bool(int)> go = [&](int maxused) -> bool {
      if (colored == n) {
        solution = col;
        return true;
      }
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (col[v] != -1) continue;
        if (best == -1 || satdeg[v] > satdeg[best] ||
            (satdeg[v] == satdeg[best] && adj[v].size() > adj[best].size()))
          best = v;
      }
      int cap = std::min(maxused + 1, t - 1);
      for (int c = 0; c <= cap; ++c) {
        if (satcnt[best][c] > 0) continue;
        if (--nodes < 0) throw BudgetExceededError(node_budget);
        col[best] = c;
        ++colored;
        for (int u : adj[best])
          if (col[u] == -1 && satcnt[u][c]++ == 0) ++satdeg[u];
        if (go(std::max(maxused, c))) return true;
        for (int u : adj[best])
          if (col[u] == -1 && --satcnt[u][c] == 0) --satdeg[u];
        col[best] = -1;
        --colored;
      }
      return false;
    };
    for (size_t i = 0; i < clique.size(); ++i) {
      int v = clique[i];
      col[v] = static_cast<int>(i);
      ++colored;
      for (int u : adj[v])
        if (col[u] == -1 && satcnt[u][i]++ == 0) ++satdeg[u];
    }
    return go(static_cast<int>(clique.size()) - 1);
  };

  for (int t = lb; t < ub; ++t) {
    std::vector<int> sol;
    if (decide(t, sol)) {
      out.chi = t;
      out.colors = std::move(sol);
      return out;
    }
  }
  out.chi = ub;
  out.colors = std::move(greedy);
  return out;
}

}  // namespace detail

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

// Exact strong chromatic number: the chromatic number of the shadow graph.
inline ChromaticResult exact_strong_chromatic(const Hypergraph& h,
                                              long long node_budget = 50'000'000) {
  ShadowGraph sg = shadow(h);
  detail::GraphColoring gc = detail::exact_graph_chromatic(sg.adj, node_budget);
  ChromaticResult out;
  out.chi = h.n == 0 ? 0 : std::max(gc.chi, 1);
  out.coloring = Coloring::of(std::move(gc.colors), ColorMode::strong);
  out.coloring.palette_size = out.chi;
  return out;
}

// Exact weak chromatic number by backtracking over palette assignments
// with first-occurrence symmetry breaking.
inline ChromaticResult exact_weak_chromatic(const Hypergraph& h,
                                            long long node_budget = 50'000'000) {
  ChromaticResult out;
  if (h.n == 0) return out;
  if (h.edge_count() == 0) {
    out.chi = 1;
    out.coloring = Coloring::of(std::vector<int>(h.n, 0), ColorMode::weak);
    return out;
  }

  // hyperedges keyed by their largest vertex: fully assigned exactly there
  std::vector<std::vector<int>> closing(h.n);
  for (int ei = 0; ei < h.edge_count(); ++ei) closing[h.edges[ei].back()].push_back(ei);

  long long nodes = node_budget;
  std::vector<int> col(h.n, -1);
  auto decide = [&](int t) -> bool {
    std::function<bool(int, int)> go = [&](int v, int maxused) -> bool {
      if (v == h.n) return true;
      int cap = std::min(maxused + 1, t - 1);
      for (int c = 0; c <= cap; ++c) {
        if (--nodes < 0) throw BudgetExceededError(node_budget);
        col[v] = c;
        bool ok = true;
        for (int ei : closing[v]) {
          const auto& e = h.edges[ei];
          bool mono = true;
          for (int x : e)
            if (col[x] != c) {
              mono = false;
              break;
            }
          if (mono) {
            ok = false;
            break;
          }
        }
        if (ok && go(v + 1, std::max(maxused, c))) return true;
      }
      col[v] = -1;
      return false;
    };
    return go(0, -1);
  };

  for (int t = 1; t <= h.n; ++t) {
    if (decide(t)) {
      out.chi = t;
      out.coloring = Coloring::of(col, ColorMode::weak);
      return out;
    }
  }
  throw std::logic_error("exact_weak_chromatic: no coloring found");  // unreachable
}

// Unite color classes of a valid strong coloring of an r-uniform
// hypergraph in groups of r-1: a hyperedge has r distinct strong colors,
// and r colors cannot fit in one group, so no hyperedge goes
// monochromatic.  Palette shrinks to ceil(p / (r-1)).
inline Coloring merge_to_weak(const Hypergraph& h, const Coloring& strong) {
  if (strong.mode != ColorMode::strong)
    throw std::invalid_argument("merge_to_weak: input coloring is not strong");
  int r = h.edge_count() > 0 ? static_cast<int>(h.edges[0].size()) : h.r_max;
  if (!h.is_uniform(r))
    throw std::invalid_argument("merge_to_weak: hypergraph is not r-uniform");
  ValidationResult vr = validate(h, strong);
  if (!vr.ok) throw std::invalid_argument("merge_to_weak: input strong coloring is invalid");
  std::vector<int> merged(h.n);
  for (int v = 0; v < h.n; ++v) merged[v] = strong.colors[v] / (r - 1);
  return Coloring::of(std::move(merged), ColorMode::weak);
}

// Peel below the threshold, then color in reverse elimination order,
// giving each vertex the least color absent from its already-colored
// shadow neighbors.  Each vertex sees fewer than `threshold` colored
// neighbors at its turn, so the palette stays within the threshold.
// A nonempty core is the Berge-pattern certificate case.
inline Coloring peel_color_strong(const Hypergraph& h, int threshold) {
  PeelResult p = peel(h, threshold);
  if (!p.core_empty()) throw NonemptyCoreError(p.core, p.core_ids);
  ShadowGraph sg = shadow(h);
  std::vector<int> col(h.n, -1);
  std::vector<char> used(threshold + 1, 0);
  for (auto it = p.order.rbegin(); it != p.order.rend(); ++it) {
    int v = *it;
    std::fill(used.begin(), used.end(), 0);
    for (int u : sg.adj[v])
      if (col[u] != -1 && col[u] <= threshold) used[col[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    col[v] = c;
  }
  return Coloring::of(std::move(col), ColorMode::strong);
}

}  // namespace hypercolor
