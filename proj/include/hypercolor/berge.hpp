#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "hypercolor/errors.hpp"
#include "hypercolor/hypergraph.hpp"
#include "hypercolor/pattern.hpp"

namespace hypercolor {

// A Berge copy of F in H: an injective placement of V(F) plus an injective
// assignment of E(F) to hyperedges such that every pattern edge lands
// inside its assigned hyperedge.
struct BergeWitness {
  std::vector<int> vertex_map;  // pattern vertex -> host vertex
  std::vector<int> edge_map;    // pattern edge index -> host hyperedge index
};

struct DetectOptions {
  long long node_budget = 10'000'000;
};

inline bool verify_witness(const Hypergraph& h, const PatternGraph& f, const BergeWitness& w) {
  if (static_cast<int>(w.vertex_map.size()) != f.n) return false;
  if (w.edge_map.size() != f.edges.size()) return false;
  std::set<int> vs, es;
  for (int x : w.vertex_map) {
    if (x < 0 || x >= h.n) return false;
    if (!vs.insert(x).second) return false;
  }
  for (int e : w.edge_map) {
    if (e < 0 || e >= h.edge_count()) return false;
    if (!es.insert(e).second) return false;
  }
  for (size_t i = 0; i < f.edges.size(); ++i) {
    const auto& host = h.edges[w.edge_map[i]];
    int a = w.vertex_map[f.edges[i].first];
    int b = w.vertex_map[f.edges[i].second];
    if (!std::binary_search(host.begin(), host.end(), a)) return false;
    if (!std::binary_search(host.begin(), host.end(), b)) return false;
  }
  return true;
}

namespace detail {

struct BudgetCounter {
  long long left;
  long long budget;
  explicit BudgetCounter(long long b) : left(b), budget(b) {}
  void tick() {
    if (--left < 0) throw BudgetExceededError(budget);
  }
};

// Kuhn augmenting-path matching from pattern edges to candidate
// hyperedges; system-of-distinct-representatives existence is exactly
// bipartite matching.
struct EdgeMatcher {
  const std::vector<std::vector<int>>& cand;  // per pattern edge
  std::vector<int> matched_edge;              // host edge -> pattern edge or -1
  std::vector<int> assignment;                // pattern edge -> host edge or -1
  std::vector<long long> stamp;
  long long clock = 0;

  EdgeMatcher(const std::vector<std::vector<int>>& cand_, int host_edges)
      : cand(cand_), matched_edge(host_edges, -1), assignment(cand_.size(), -1),
        stamp(host_edges, -1) {}

  bool augment(int fe) {
    for (int he : cand[fe]) {
      if (stamp[he] == clock) continue;
      stamp[he] = clock;
      if (matched_edge[he] == -1 || augment(matched_edge[he])) {
        matched_edge[he] = fe;
        assignment[fe] = he;
        return true;
      }
    }
    return false;
  }

  // true iff every pattern edge in `active` can get a distinct hyperedge
  bool solve(const std::vector<int>& active) {
    std::fill(matched_edge.begin(), matched_edge.end(), -1);
    std::fill(assignment.begin(), assignment.end(), -1);
    for (int fe : active) {
      ++clock;
      if (!augment(fe)) return false;
    }
    return true;
  }
};

// Connected ordering with decreasing degree: deterministic host
// candidates and reproducible witnesses.
inline std::vector<int> pattern_order(const PatternGraph& f) {
  std::vector<int> deg(f.n, 0);
  for (auto [u, v] : f.edges) {
    ++deg[u];
    ++deg[v];
  }
  auto adj = f.adjacency();
  std::vector<int> placed_nbrs(f.n, 0);
  std::vector<char> placed(f.n, 0);
  std::vector<int> order;
  for (int step = 0; step < f.n; ++step) {
    int best = -1;
    for (int v = 0; v < f.n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && deg[v] > deg[best]))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (int u : adj[best]) ++placed_nbrs[u];
  }
  return order;
}

}  // namespace detail

// Exhaustive Berge-F containment: enumerate injective vertex embeddings
// whose pattern edges land on shadow edges, pruning with an incremental
// bipartite matching between the already-placed pattern edges and their
// candidate hyperedges.
inline std::optional<BergeWitness> contains_berge(const Hypergraph& h, const PatternGraph& f,
                                                  DetectOptions opts = {}) {
  if (f.n > h.n || f.edge_count() > h.edge_count()) return std::nullopt;
  if (f.n == 0) return BergeWitness{};

  ShadowGraph sg = shadow(h);
  std::vector<int> host_edge_deg(h.n, 0);
  for (const auto& e : h.edges)
    for (int x : e) ++host_edge_deg[x];
  std::vector<int> fdeg(f.n, 0);
  for (auto [u, v] : f.edges) {
    ++fdeg[u];
    ++fdeg[v];
  }

  std::vector<int> order = detail::pattern_order(f);
  std::vector<int> pos(f.n);
  for (int i = 0; i < f.n; ++i) pos[order[i]] = i;

  // pattern edges become active once both endpoints are placed
  std::vector<std::vector<int>> activates(f.n);
  for (size_t i = 0; i < f.edges.size(); ++i) {
    auto [u, v] = f.edges[i];
    activates[pos[u] > pos[v] ? u : v].push_back(static_cast<int>(i));
  }

  std::vector<int> vmap(f.n, -1);
  std::vector<char> used(h.n, 0);
  std::vector<std::vector<int>> cand(f.edges.size());
  std::vector<int> active;
  detail::BudgetCounter budget(opts.node_budget);
  std::optional<BergeWitness> found;

  std::function<bool(int)> place = [&](int step) -> bool {
    if (step == f.n) {
      detail::EdgeMatcher matcher(cand, h.edge_count());
      if (!matcher.solve(active)) return false;
      BergeWitness w;
      w.vertex_map = vmap;
      w.edge_map.assign(f.edges.size(), -1);
      for (size_t i = 0; i < f.edges.size(); ++i) w.edge_map[i] = matcher.assignment[i];
      found = std::move(w);
      return true;
    }
    int u = order[step];
    for (int x = 0; x < h.n; ++x) {
      if (used[x]) continue;
      if (host_edge_deg[x] < fdeg[u]) continue;
      bool ok = true;
      for (int fe : activates[u]) {
        auto [a, b] = f.edges[fe];
        int other = vmap[a == u ? b : a];
        if (!sg.adjacent(x, other)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      budget.tick();
      vmap[u] = x;
      used[x] = 1;
      size_t added = 0;
      for (int fe : activates[u]) {
        auto [a, b] = f.edges[fe];
        int pa = vmap[a], pb = vmap[b];
        cand[fe].clear();
        for (int he = 0; he < h.edge_count(); ++he) {
          const auto& e = h.edges[he];
          if (std::binary_search(e.begin(), e.end(), pa) &&
              std::binary_search(e.begin(), e.end(), pb))
            cand[fe].push_back(he);
        }
        active.push_back(fe);
        ++added;
      }
      detail::EdgeMatcher matcher(cand, h.edge_count());
      bool feasible = matcher.solve(active);
      if (feasible && place(step + 1)) return true;
      for (size_t i = 0; i < added; ++i) active.pop_back();
      vmap[u] = -1;
      used[x] = 0;
    }
    return false;
  };

  place(0);
  return found;
}

// Specialized Berge path search: backtracking over vertex sequences with
// the defining hyperedge chosen (and marked used) at every step.
// Equivalent to contains_berge(h, path_pattern(k)).
inline std::optional<BergeWitness> contains_berge_path(const Hypergraph& h, int k,
                                                       DetectOptions opts = {}) {
  if (k < 1) throw std::invalid_argument("contains_berge_path: k must be >= 1");
  if (h.n < k + 1 || h.edge_count() < k) return std::nullopt;

  ShadowGraph sg = shadow(h);
  std::vector<std::vector<int>> incident(h.n);
  for (int ei = 0; ei < h.edge_count(); ++ei)
    for (int x : h.edges[ei]) incident[x].push_back(ei);

  std::vector<int> seq;
  std::vector<int> defs;
  std::vector<char> vused(h.n, 0), eused(h.edge_count(), 0);
  detail::BudgetCounter budget(opts.node_budget);
  std::optional<BergeWitness> found;

  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(seq.size()) == k + 1) {
      BergeWitness w;
      w.vertex_map = seq;
      w.edge_map = defs;
      found = std::move(w);
      return true;
    }
    int cur = seq.back();
    for (int ei : incident[cur]) {
      if (eused[ei]) continue;
      for (int v : h.edges[ei]) {
        if (vused[v]) continue;
        budget.tick();
        seq.push_back(v);
        vused[v] = 1;
        defs.push_back(ei);
        eused[ei] = 1;
        if (extend()) return true;
        seq.pop_back();
        vused[v] = 0;
        defs.pop_back();
        eused[ei] = 0;
      }
    }
    return false;
  };

  for (int v0 = 0; v0 < h.n && !found; ++v0) {
    budget.tick();
    seq.assign(1, v0);
    vused[v0] = 1;
    extend();
    vused[v0] = 0;
  }
  return found;
}

// Berge cycle with k hyperedges.  k = 2 means two distinct hyperedges
// sharing two vertices.  Rotation is broken by starting at the cycle
// minimum, reflection by the direction of the second vertex.
inline std::optional<BergeWitness> contains_berge_cycle(const Hypergraph& h, int k,
                                                        DetectOptions opts = {}) {
  if (k < 2) throw std::invalid_argument("contains_berge_cycle: k must be >= 2");
  if (h.edge_count() < k) return std::nullopt;

  if (k == 2) {
    for (int i = 0; i < h.edge_count(); ++i)
      for (int j = i + 1; j < h.edge_count(); ++j) {
        std::vector<int> common;
        std::set_intersection(h.edges[i].begin(), h.edges[i].end(), h.edges[j].begin(),
                              h.edges[j].end(), std::back_inserter(common));
        if (common.size() >= 2) {
          BergeWitness w;
          w.vertex_map = {common[0], common[1]};
          w.edge_map = {i, j};
          return w;
        }
      }
    return std::nullopt;
  }

  if (h.n < k) return std::nullopt;
  ShadowGraph sg = shadow(h);
  std::vector<std::vector<int>> incident(h.n);
  for (int ei = 0; ei < h.edge_count(); ++ei)
    for (int x : h.edges[ei]) incident[x].push_back(ei);

  std::vector<int> seq, defs;
  std::vector<char> vused(h.n, 0), eused(h.edge_count(), 0);
  detail::BudgetCounter budget(opts.node_budget);
  std::optional<BergeWitness> found;

  std::function<bool()> extend = [&]() -> bool {
    int cur = seq.back();
    if (static_cast<int>(seq.size()) == k) {
      if (seq.back() < seq[1]) return false;  // reflection break
      for (int ei : incident[cur]) {
        if (eused[ei]) continue;
        if (!std::binary_search(h.edges[ei].begin(), h.edges[ei].end(), seq[0])) continue;
        BergeWitness w;
        w.vertex_map = seq;
        w.edge_map = defs;
        w.edge_map.push_back(ei);
        found = std::move(w);
        return true;
      }
      return false;
    }
    for (int ei : incident[cur]) {
      if (eused[ei]) continue;
      for (int v : h.edges[ei]) {
        if (vused[v] || v < seq[0]) continue;  // rotation break: start at minimum
        budget.tick();
        seq.push_back(v);
        vused[v] = 1;
        defs.push_back(ei);
        eused[ei] = 1;
        if (extend()) return true;
        seq.pop_back();
        vused[v] = 0;
        defs.pop_back();
        eused[ei] = 0;
      }
    }
    return false;
  };

  for (int v0 = 0; v0 < h.n && !found; ++v0) {
    budget.tick();
    seq.assign(1, v0);
    vused[v0] = 1;
    extend();
    vused[v0] = 0;
  }
  return found;
}

// No Berge cycle of any length, the length-two case included.
inline bool is_hypertree(const Hypergraph& h, DetectOptions opts = {}) {
  for (int k = 2; k <= h.edge_count(); ++k)
    if (contains_berge_cycle(h, k, opts)) return false;
  return true;
}

// Sub-hypergraph containment: an injective vertex map sending every
// hyperedge of the pattern onto a hyperedge of the host.
inline std::optional<std::vector<int>> contains_sub_hypergraph(const Hypergraph& h,
                                                               const Hypergraph& p,
                                                               DetectOptions opts = {}) {
  if (p.n > h.n || p.edge_count() > h.edge_count()) return std::nullopt;
  std::vector<int> vmap(p.n, -1);
  std::vector<char> used_v(h.n, 0), used_e(h.edge_count(), 0);
  detail::BudgetCounter budget(opts.node_budget);

  std::function<bool(int)> match_edge = [&](int pi) -> bool {
    if (pi == p.edge_count()) return true;
    const auto& f = p.edges[pi];
    for (int he = 0; he < h.edge_count(); ++he) {
      if (used_e[he]) continue;
      const auto& e = h.edges[he];
      if (e.size() != f.size()) continue;
      bool ok = true;
      std::vector<int> unmapped;
      std::vector<char> slot_taken(e.size(), 0);
      for (int x : f) {
        if (vmap[x] == -1) {
          unmapped.push_back(x);
          continue;
        }
        auto it = std::lower_bound(e.begin(), e.end(), vmap[x]);
        if (it == e.end() || *it != vmap[x]) {
          ok = false;
          break;
        }
        slot_taken[it - e.begin()] = 1;
      }
      if (!ok) continue;
      // free host slots of e, ascending
      std::vector<int> slots;
      for (size_t i = 0; i < e.size(); ++i)
        if (!slot_taken[i] && !used_v[e[i]]) slots.push_back(e[i]);
      if (slots.size() < unmapped.size()) continue;
      // branch over injections of the unmapped pattern vertices into slots
      std::vector<int> chosen(unmapped.size(), -1);
      std::function<bool(size_t)> inject = [&](size_t ui) -> bool {
        if (ui == unmapped.size()) {
          used_e[he] = 1;
          if (match_edge(pi + 1)) return true;
          used_e[he] = 0;
          return false;
        }
        for (int s : slots) {
          if (used_v[s]) continue;
          budget.tick();
          vmap[unmapped[ui]] = s;
          used_v[s] = 1;
          chosen[ui] = s;
          if (inject(ui + 1)) return true;
          vmap[unmapped[ui]] = -1;
          used_v[s] = 0;
          chosen[ui] = -1;
        }
        return false;
      };
      budget.tick();
      if (inject(0)) return true;
    }
    return false;
  };

  if (!match_edge(0)) return std::nullopt;
  // isolated pattern vertices go to the least free host vertices
  for (int x = 0; x < p.n; ++x) {
    if (vmap[x] != -1) continue;
    for (int v = 0; v < h.n; ++v)
      if (!used_v[v]) {
        vmap[x] = v;
        used_v[v] = 1;
        break;
      }
  }
  return vmap;
}

// S_k^+-freeness of a 3-uniform hypergraph: no vertex has k pairwise
// disjoint link edges.
inline bool is_skplus_free(const Hypergraph& h, int k) {
  if (k < 1) throw std::invalid_argument("is_skplus_free: k must be >= 1");
  if (!h.is_uniform(3)) throw std::invalid_argument("is_skplus_free: hypergraph is not 3-uniform");
  for (int v = 0; v < h.n; ++v)
    if (degrees(h, v).d_m >= k) return false;
  return true;
}

// Greedy Berge embedding of a forest, one vertex at a time in an order
// where each vertex has at most one earlier neighbor.  The candidate for
// the new vertex must be unembedded and must avoid every already-used
// defining hyperedge through the attachment vertex; any hyperedge
// containing the resulting pair is then unused and can define the edge.
// Succeeds whenever every host vertex has
// d^N >= k + (r-3)(k-1) + max_degree - 1.  When that degree condition
// fails the single greedy pass still runs, but an absent result is marked
// as an incomplete search rather than a nonexistence claim.
struct TreeEmbedResult {
  std::optional<BergeWitness> witness;
  bool complete_search = false;
};

inline TreeEmbedResult greedy_embed_tree(const Hypergraph& h, const PatternGraph& t) {
  if (!t.is_forest()) throw std::invalid_argument("greedy_embed_tree: pattern is not a forest");
  TreeEmbedResult out;
  int k = t.edge_count();
  int r = std::max(3, h.max_edge_size());
  int threshold = k + (r - 3) * (k - 1) + t.max_degree() - 1;

  ShadowGraph sg = shadow(h);
  bool degree_ok = h.n > 0;
  for (int v = 0; v < h.n; ++v)
    if (sg.degree(v) < threshold) {
      degree_ok = false;
      break;
    }
  // the degree guarantee is about trees; forests with isolated pattern
  // vertices can exceed the k+1 embedded-vertex count it relies on
  out.complete_search = degree_ok && t.n <= k + 1;
  if (t.n > h.n) return out;

  auto adj = t.adjacency();
  std::vector<int> edge_index(static_cast<size_t>(t.n) * t.n, -1);
  for (size_t i = 0; i < t.edges.size(); ++i) {
    auto [u, v] = t.edges[i];
    edge_index[static_cast<size_t>(u) * t.n + v] = static_cast<int>(i);
    edge_index[static_cast<size_t>(v) * t.n + u] = static_cast<int>(i);
  }

  // BFS order per pattern component, components by minimum vertex
  std::vector<int> order, parent(t.n, -1);
  std::vector<char> seen(t.n, 0);
  for (int rt = 0; rt < t.n; ++rt) {
    if (seen[rt]) continue;
    seen[rt] = 1;
    std::vector<int> q = {rt};
    for (size_t head = 0; head < q.size(); ++head) {
      int u = q[head];
      order.push_back(u);
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = u;
          q.push_back(w);
        }
    }
  }

  std::vector<int> host_of(t.n, -1);
  std::vector<char> used_host(h.n, 0), used_edge(h.edge_count(), 0);
  std::vector<int> emap(t.edges.size(), -1);
  std::vector<std::vector<int>> defining_through(h.n);  // used defining edges at a host vertex

  auto fail = [&]() {
    out.witness = std::nullopt;
    return out;
  };

  for (int u : order) {
    if (parent[u] == -1) {
      int pick = -1;
      for (int v = 0; v < h.n; ++v)
        if (!used_host[v]) {
          pick = v;
          break;
        }
      if (pick == -1) return fail();
      host_of[u] = pick;
      used_host[pick] = 1;
      continue;
    }
    int up = host_of[parent[u]];
    int chosen = -1, chosen_edge = -1;
    for (int cand : sg.adj[up]) {
      if (used_host[cand]) continue;
      bool blocked = false;
      for (int de : defining_through[up])
        if (std::binary_search(h.edges[de].begin(), h.edges[de].end(), cand)) {
          blocked = true;
          break;
        }
      if (blocked) continue;
      for (int ei = 0; ei < h.edge_count() && chosen_edge == -1; ++ei) {
        if (used_edge[ei]) continue;
        const auto& e = h.edges[ei];
        if (std::binary_search(e.begin(), e.end(), up) &&
            std::binary_search(e.begin(), e.end(), cand))
          chosen_edge = ei;
      }
      if (chosen_edge != -1) {
        chosen = cand;
        break;
      }
    }
    if (chosen == -1) {
      if (out.complete_search)
        throw std::logic_error("greedy_embed_tree: greedy step failed despite degree condition");
      return fail();
    }
    host_of[u] = chosen;
    used_host[chosen] = 1;
    used_edge[chosen_edge] = 1;
    emap[edge_index[static_cast<size_t>(u) * t.n + parent[u]]] = chosen_edge;
    for (int x : h.edges[chosen_edge]) defining_through[x].push_back(chosen_edge);
  }

  BergeWitness w;
  w.vertex_map = host_of;
  w.edge_map = emap;
  if (!verify_witness(h, t, w))
    throw std::logic_error("greedy_embed_tree: constructed witness failed verification");
  out.witness = std::move(w);
  return out;
}

}  // namespace hypercolor
