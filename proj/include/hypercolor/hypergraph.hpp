#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercolor {

// Vertices are dense ids 0..n-1.  Every hyperedge is a strictly increasing
// vector of vertex ids with size in [2, r_max]; size-1 edges are rejected.
// The edge list is ordered and duplicate-free (simple hypergraph); derived
// operations that can create duplicates merge them before constructing.
struct Hypergraph {
  int n = 0;
  int r_max = 3;
  std::vector<std::vector<int>> edges;

  Hypergraph() = default;

  Hypergraph(int n_, std::vector<std::vector<int>> edges_, int r_max_ = 3)
      : n(n_), r_max(r_max_), edges(std::move(edges_)) {
    if (n < 0) throw std::invalid_argument("hypergraph: negative vertex count");
    if (r_max < 2) throw std::invalid_argument("hypergraph: r_max must be >= 2");
    std::set<std::vector<int>> seen;
    for (auto& e : edges) {
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("hypergraph: repeated vertex inside a hyperedge");
      if (static_cast<int>(e.size()) < 2)
        throw std::invalid_argument("hypergraph: hyperedge of size < 2");
      if (static_cast<int>(e.size()) > r_max)
        throw std::invalid_argument("hypergraph: hyperedge larger than r_max");
      if (e.front() < 0 || e.back() >= n)
        throw std::invalid_argument("hypergraph: vertex id out of range");
      if (!seen.insert(e).second)
        throw std::invalid_argument("hypergraph: duplicate hyperedge");
    }
  }

  int edge_count() const { return static_cast<int>(edges.size()); }

  int max_edge_size() const {
    int r = 0;
    for (const auto& e : edges) r = std::max(r, static_cast<int>(e.size()));
    return r;
  }

  // Every hyperedge has exactly r vertices (vacuously true when edgeless).
  bool is_uniform(int r) const {
    for (const auto& e : edges)
      if (static_cast<int>(e.size()) != r) return false;
    return true;
  }

  bool is_at_most(int r) const { return max_edge_size() <= r; }

  void check_vertex(int v, const char* who) const {
    if (v < 0 || v >= n)
      throw std::invalid_argument(std::string(who) + ": vertex id out of range");
  }
};

// The 2-shadow: uv adjacent iff some hyperedge contains both.
// Neighbor lists are sorted and irreflexive.
struct ShadowGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  bool adjacent(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  long long total_edges() const {
    long long s = 0;
    for (const auto& a : adj) s += static_cast<long long>(a.size());
    return s / 2;
  }
};

inline ShadowGraph shadow(const Hypergraph& h) {
  ShadowGraph g;
  g.n = h.n;
  g.adj.assign(h.n, {});
  for (const auto& e : h.edges)
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        g.adj[e[i]].push_back(e[j]);
        g.adj[e[j]].push_back(e[i]);
      }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

// Link of a vertex, re-indexed onto its neighborhood.  vertex_ids maps
// link ids back to ids of the host.  Size-2 hyperedges through v would
// leave singletons, which are reported in pair_neighbors instead of being
// stored as edges.
struct LinkView {
  Hypergraph link;
  std::vector<int> vertex_ids;
  std::vector<int> pair_neighbors;
};

inline LinkView link(const Hypergraph& h, int v) {
  h.check_vertex(v, "link");
  LinkView out;
  std::set<int> nbrs;
  for (const auto& e : h.edges) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    for (int x : e)
      if (x != v) nbrs.insert(x);
  }
  out.vertex_ids.assign(nbrs.begin(), nbrs.end());
  std::vector<int> to_link(h.n, -1);
  for (size_t i = 0; i < out.vertex_ids.size(); ++i) to_link[out.vertex_ids[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> link_edges;
  for (const auto& e : h.edges) {
    if (!std::binary_search(e.begin(), e.end(), v)) continue;
    if (e.size() == 2) {
      out.pair_neighbors.push_back(e[0] == v ? e[1] : e[0]);
      continue;
    }
    std::vector<int> f;
    for (int x : e)
      if (x != v) f.push_back(to_link[x]);
    link_edges.push_back(std::move(f));
  }
  int link_r = std::max(2, h.r_max - 1);
  out.link = Hypergraph(static_cast<int>(out.vertex_ids.size()), std::move(link_edges), link_r);
  std::sort(out.pair_neighbors.begin(), out.pair_neighbors.end());
  return out;
}

namespace detail {

// Maximum number of pairwise-disjoint sets, by branching on the lowest
// vertex still covered by an available set.  Exact; desk scale only.
inline int max_disjoint_sets(const std::vector<std::vector<int>>& sets, int n) {
  std::vector<char> used(n, 0);
  std::vector<char> dead(sets.size(), 0);
  std::function<int()> go = [&]() -> int {
    int pivot = -1;
    for (size_t i = 0; i < sets.size(); ++i) {
      if (dead[i]) continue;
      bool free_set = true;
      for (int x : sets[i])
        if (used[x]) { free_set = false; break; }
      if (free_set) {
        int low = sets[i].front();
        if (pivot == -1 || low < pivot) pivot = low;
      }
    }
    if (pivot == -1) return 0;
    // branch 1..deg: take one available set through the pivot
    int best = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      if (dead[i]) continue;
      if (!std::binary_search(sets[i].begin(), sets[i].end(), pivot)) continue;
      bool free_set = true;
      for (int x : sets[i])
        if (used[x]) { free_set = false; break; }
      if (!free_set) continue;
      for (int x : sets[i]) used[x] = 1;
      best = std::max(best, 1 + go());
      for (int x : sets[i]) used[x] = 0;
    }
    // last branch: leave the pivot unmatched
    used[pivot] = 1;
    best = std::max(best, go());
    used[pivot] = 0;
    return best;
  };
  return go();
}

}  // namespace detail

// d   = number of hyperedges containing v
// d_n = |N_H(v)|
// d_m = maximum number of pairwise-disjoint edges in the link of v
//       (size-2 hyperedges through v count as singleton link members and
//       never join a matching of link hyperedges of size >= 2, matching
//       the size-1 exclusion; they still contribute to d and d_n).
struct DegreeProfile {
  int d = 0;
  int d_n = 0;
  int d_m = 0;
};

inline DegreeProfile degrees(const Hypergraph& h, int v) {
  h.check_vertex(v, "degrees");
  DegreeProfile p;
  LinkView lv = link(h, v);
  for (const auto& e : h.edges)
    if (std::binary_search(e.begin(), e.end(), v)) ++p.d;
  p.d_n = static_cast<int>(lv.vertex_ids.size());
  p.d_m = detail::max_disjoint_sets(lv.link.edges, lv.link.n);
  return p;
}

// H\u of the preliminaries: u is removed from every hyperedge, resulting
// size-1 edges are dropped, duplicates are merged, ids are compacted.
// old_ids maps new ids back to the input's ids.
struct VertexDeletion {
  Hypergraph result;
  std::vector<int> old_ids;
};

inline VertexDeletion delete_vertex(const Hypergraph& h, int u) {
  h.check_vertex(u, "delete_vertex");
  VertexDeletion out;
  out.old_ids.reserve(h.n - 1);
  for (int x = 0; x < h.n; ++x)
    if (x != u) out.old_ids.push_back(x);
  auto remap = [&](int x) { return x < u ? x : x - 1; };
  std::vector<std::vector<int>> kept;
  std::set<std::vector<int>> seen;
  for (const auto& e : h.edges) {
    std::vector<int> f;
    for (int x : e)
      if (x != u) f.push_back(remap(x));
    if (f.size() < 2) continue;
    if (seen.insert(f).second) kept.push_back(std::move(f));
  }
  out.result = Hypergraph(h.n - 1, std::move(kept), h.r_max);
  return out;
}

// Connected components of the shadow, ordered by minimum vertex id; each
// component is a sorted vertex list.  No hyperedge crosses two components.
inline std::vector<std::vector<int>> components(const Hypergraph& h) {
  ShadowGraph g = shadow(h);
  std::vector<std::vector<int>> comps;
  std::vector<char> vis(h.n, 0);
  for (int r = 0; r < h.n; ++r) {
    if (vis[r]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(r);
    vis[r] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u : g.adj[v])
        if (!vis[u]) {
          vis[u] = 1;
          q.push(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Sub-hypergraph induced by a vertex set: the hyperedges entirely inside
// it, re-indexed.  vertex_ids/edge_origin map back to the input.
struct SubHypergraph {
  Hypergraph sub;
  std::vector<int> vertex_ids;
  std::vector<int> edge_origin;
};

inline SubHypergraph induced_sub_hypergraph(const Hypergraph& h, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  SubHypergraph out;
  out.vertex_ids = std::move(vertices);
  std::vector<int> to_sub(h.n, -1);
  for (size_t i = 0; i < out.vertex_ids.size(); ++i) {
    h.check_vertex(out.vertex_ids[i], "induced_sub_hypergraph");
    to_sub[out.vertex_ids[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> es;
  for (int ei = 0; ei < h.edge_count(); ++ei) {
    std::vector<int> f;
    bool inside = true;
    for (int x : h.edges[ei]) {
      if (to_sub[x] == -1) {
        inside = false;
        break;
      }
      f.push_back(to_sub[x]);
    }
    if (!inside) continue;
    es.push_back(std::move(f));
    out.edge_origin.push_back(ei);
  }
  out.sub = Hypergraph(static_cast<int>(out.vertex_ids.size()), std::move(es), h.r_max);
  return out;
}

// Degeneracy-style peel of the shadow graph: repeatedly remove the
// least-id vertex whose degree in the induced shadow subgraph on the
// remaining vertices is below the threshold.  The core is returned as the
// truncated residual hypergraph (edges intersected with the surviving
// vertex set, sizes >= 2 kept, duplicates merged); core_ids maps core ids
// back to input ids and core_edge_origin maps core edges back to input
// edge indices, so witnesses found in the core lift to the input.
struct PeelResult {
  std::vector<int> order;
  Hypergraph core;
  std::vector<int> core_ids;
  std::vector<int> core_edge_origin;

  bool core_empty() const { return core.n == 0; }
};

inline PeelResult peel(const Hypergraph& h, int threshold) {
  if (threshold < 1) throw std::invalid_argument("peel: threshold must be >= 1");
  ShadowGraph g = shadow(h);
  std::vector<int> deg(h.n);
  std::vector<char> alive(h.n, 1);
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < h.n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < threshold) ready.push(v);
  }
  PeelResult out;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    alive[v] = 0;
    out.order.push_back(v);
    for (int u : g.adj[v])
      if (alive[u] && deg[u]-- == threshold) ready.push(u);
  }
  std::vector<int> to_core(h.n, -1);
  for (int v = 0; v < h.n; ++v)
    if (alive[v]) {
      to_core[v] = static_cast<int>(out.core_ids.size());
      out.core_ids.push_back(v);
    }
  std::vector<std::vector<int>> core_edges;
  std::set<std::vector<int>> seen;
  for (int ei = 0; ei < h.edge_count(); ++ei) {
    std::vector<int> f;
    for (int x : h.edges[ei])
      if (alive[x]) f.push_back(to_core[x]);
    if (f.size() < 2) continue;
    if (seen.insert(f).second) {
      core_edges.push_back(std::move(f));
      out.core_edge_origin.push_back(ei);
    }
  }
  out.core = Hypergraph(static_cast<int>(out.core_ids.size()), std::move(core_edges), h.r_max);
  return out;
}

}  // namespace hypercolor
