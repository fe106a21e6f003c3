#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hypercolor/berge.hpp"
#include "hypercolor/coloring.hpp"
#include "hypercolor/hypergraph.hpp"
#include "hypercolor/pattern.hpp"

namespace hypercolor {

// Two siblings attached through the same defining hyperedge, which is
// exactly {first, second, parent}.  first was attached before second.
struct SpecialPair {
  int first;
  int second;
  int parent;
  int edge;
  int depth;  // depth of the pair members
};

struct DfsTree {
  int root = -1;
  std::vector<int> parent;       // -1 at the root and outside the component
  std::vector<int> parent_edge;  // defining hyperedge of (parent[v], v)
  std::vector<int> depth;        // -1 outside the component
  std::vector<std::vector<int>> children;  // in attach order, rightmost last
  std::vector<int> preorder;     // component vertices in visit order
  std::vector<SpecialPair> special_pairs;
  int height = 0;

  bool in_tree(int v) const { return depth[v] >= 0; }
  int size() const { return static_cast<int>(preorder.size()); }

  std::vector<int> subtree_heights() const {
    std::vector<int> hts(parent.size(), 0);
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it)
      for (int c : children[*it]) hts[*it] = std::max(hts[*it], hts[c] + 1);
    return hts;
  }
};

// DFS over a {2,3}-hypergraph.  Expanding r picks an unvisited vertex v
// reachable through a hyperedge e that is not ignored along the current
// root-to-r path; v is attached with defining hyperedge e, and if the
// third vertex u of e is still unvisited when v's subtree completes, u is
// attached through e as well, forming a special pair (v,u).  The subtree
// under v ignores e, the subtree under u does not.  The ignored set is a
// per-hyperedge on-path counter, and per-vertex incidence scans never
// back up, so construction is linear in n+m.
inline DfsTree dfs_build(const Hypergraph& h, int root) {
  h.check_vertex(root, "dfs_build");
  if (!h.is_at_most(3)) throw std::invalid_argument("dfs_build: hypergraph is not {2,3}-uniform");

  std::vector<std::vector<int>> incident(h.n);
  for (int ei = 0; ei < h.edge_count(); ++ei)
    for (int x : h.edges[ei]) incident[x].push_back(ei);

  DfsTree t;
  t.root = root;
  t.parent.assign(h.n, -1);
  t.parent_edge.assign(h.n, -1);
  t.depth.assign(h.n, -1);
  t.children.assign(h.n, {});

  std::vector<int> on_path(h.edge_count(), 0);
  std::vector<size_t> ptr(h.n, 0);

  struct Frame {
    int v;
    int await_edge = -1;   // defining edge of the active child subtree
    int await_child = -1;  // the child it attached
  };
  std::vector<Frame> stack;

  auto attach = [&](int child, int par, int edge) {
    t.parent[child] = par;
    t.parent_edge[child] = edge;
    t.depth[child] = t.depth[par] + 1;
    t.children[par].push_back(child);
    t.preorder.push_back(child);
    t.height = std::max(t.height, t.depth[child]);
  };

  t.depth[root] = 0;
  t.preorder.push_back(root);
  stack.push_back({root});

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.await_edge != -1) {
      int e = f.await_edge;
      int first_child = f.await_child;
      f.await_edge = -1;
      f.await_child = -1;
      --on_path[e];
      if (h.edges[e].size() == 3) {
        int third = -1;
        for (int x : h.edges[e])
          if (t.depth[x] == -1) third = x;
        if (third != -1) {
          attach(third, f.v, e);
          t.special_pairs.push_back({first_child, third, f.v, e, t.depth[third]});
          stack.push_back({third});
          continue;
        }
      }
    }
    bool descended = false;
    while (ptr[f.v] < incident[f.v].size()) {
      int e = incident[f.v][ptr[f.v]];
      if (on_path[e] > 0) {
        ++ptr[f.v];
        continue;
      }
      int next = -1;
      for (int x : h.edges[e])
        if (t.depth[x] == -1 && (next == -1 || x < next)) next = x;
      if (next == -1) {
        ++ptr[f.v];
        continue;
      }
      attach(next, f.v, e);
      f.await_edge = e;
      f.await_child = next;
      ++on_path[e];
      stack.push_back({next});
      descended = true;
      break;
    }
    if (!descended && stack.back().await_edge == -1) stack.pop_back();
  }
  return t;
}

namespace detail {

inline void check_tree_spans(const Hypergraph& h, const DfsTree& t, const char* who) {
  if (t.size() != h.n)
    throw std::invalid_argument(std::string(who) +
                                ": tree does not span the hypergraph (input not connected?)");
}

inline std::vector<int> collect_subtree(const DfsTree& t, int root) {
  std::vector<int> nodes = {root};
  for (size_t head = 0; head < nodes.size(); ++head)
    for (int c : t.children[nodes[head]]) nodes.push_back(c);
  return nodes;
}

}  // namespace detail

// Tree coloring with palette {0..k-1}: a vertex at depth d starts with
// color d (its palette is the tail of the parent's palette, minus the
// parent's color).  Bottom-up, every special pair that collides gets two
// color classes transposed inside the second member's subtree; both
// classes come from that subtree's palette, so distinctness against
// ancestors and inside the subtree is preserved.  The validator runs at
// the end and a failure is a hard error: it means the preconditions
// (connected, Berge-C_k-free, minimum shadow degree >= k, height <= k-1)
// did not actually hold.
inline Coloring dfs_color_strong(const Hypergraph& h, const DfsTree& t, int k) {
  if (k < 1) throw std::invalid_argument("dfs_color_strong: k must be >= 1");
  detail::check_tree_spans(h, t, "dfs_color_strong");
  if (t.height > k - 1) throw PaletteExceededError();

  std::vector<int> col(h.n, 0);
  for (int v : t.preorder) col[v] = t.depth[v];

  std::vector<SpecialPair> pairs = t.special_pairs;
  std::stable_sort(pairs.begin(), pairs.end(), [](const SpecialPair& a, const SpecialPair& b) {
    if (a.depth != b.depth) return a.depth > b.depth;
    if (a.parent != b.parent) return a.parent < b.parent;
    return a.first < b.first;
  });

  for (const auto& sp : pairs) {
    if (col[sp.first] != col[sp.second]) continue;
    int c = col[sp.second];
    std::vector<int> subtree = detail::collect_subtree(t, sp.second);
    std::vector<char> used(k, 0);
    for (int v : subtree) used[col[v]] = 1;
    int cprime = -1;
    for (int x = sp.depth; x < k; ++x)
      if (x != c && used[x]) {
        cprime = x;
        break;
      }
    if (cprime == -1)
      for (int x = sp.depth; x < k; ++x)
        if (x != c) {
          cprime = x;
          break;
        }
    if (cprime == -1) throw PaletteExceededError();
    for (int v : subtree) {
      if (col[v] == c)
        col[v] = cprime;
      else if (col[v] == cprime)
        col[v] = c;
    }
  }

  Coloring out = Coloring::of(std::move(col), ColorMode::strong);
  ValidationResult vr = validate(h, out);
  if (!vr.ok) throw InvalidColoringError(vr.violating_edge);
  return out;
}

// Weak coloring off the same tree: color = depth mod ceil(k/2).  Every
// hyperedge lies on one root-to-leaf chain or is a special pair plus its
// parent, so in the 3-uniform case a monochromatic hyperedge would need
// two depth gaps of at least ceil(k/2), more than the height bound k-1
// allows.  A 2-edge joining two far-apart chain layers can defeat this;
// the validator reports the offending hyperedge instead of returning a
// bad coloring.
inline Coloring dfs_color_weak(const Hypergraph& h, const DfsTree& t, int k) {
  if (k < 1) throw std::invalid_argument("dfs_color_weak: k must be >= 1");
  detail::check_tree_spans(h, t, "dfs_color_weak");
  int palette = (k + 1) / 2;
  std::vector<int> col(h.n, 0);
  for (int v : t.preorder) col[v] = t.depth[v] % palette;
  Coloring out = Coloring::of(std::move(col), ColorMode::weak);
  ValidationResult vr = validate(h, out);
  if (!vr.ok) throw InvalidColoringError(vr.violating_edge);
  return out;
}

// Outcome of the full pipeline: a validated coloring, or a verified Berge
// path witness explaining why the input was not colorable as promised.
struct PipelineResult {
  std::optional<Coloring> coloring;
  std::optional<BergeWitness> witness;

  bool colored() const { return coloring.has_value(); }
};

// Full coloring pipeline for Berge-path-free {2,3}-hypergraphs:
//   1. peel vertices below shadow degree k, remembering the order;
//   2. split the residual core into components (every surviving vertex
//      keeps >= k core neighbors, so components have > k vertices and a
//      Berge k-cycle cannot hide in one when the input is path-free; a
//      component on exactly k vertices would be the cycle case and is
//      colored directly);
//   3. color each component from its DFS tree;
//   4. re-add the peeled vertices greedily in reverse order.
// Any internal contract violation is converted into a Berge path
// certificate: either straight off a too-deep DFS tree or through the
// exhaustive detector.
inline PipelineResult color_bpk_free(const Hypergraph& h, int k, ColorMode mode,
                                     DetectOptions opts = {}) {
  if (k < 3) throw std::invalid_argument("color_bpk_free: k must be >= 3");
  if (!h.is_at_most(3))
    throw std::invalid_argument("color_bpk_free: hypergraph is not {2,3}-uniform");
  const int weak_palette = (k + 1) / 2;
  const bool three_uniform = h.is_uniform(3);

  PipelineResult out;
  auto fail_with_certificate = [&](std::optional<BergeWitness> direct) -> PipelineResult {
    if (direct && verify_witness(h, path_pattern(k), *direct)) {
      out.witness = std::move(direct);
      return out;
    }
    std::optional<BergeWitness> w = contains_berge_path(h, k, opts);
    if (!w)
      throw std::logic_error(
          "color_bpk_free: pipeline contract failed on a Berge-path-free input");
    out.witness = std::move(w);
    return out;
  };

  PeelResult pr = peel(h, k);
  std::vector<int> col(h.n, -1);

  for (const auto& comp : components(pr.core)) {
    SubHypergraph sh = induced_sub_hypergraph(pr.core, comp);
    auto lift_vertex = [&](int v) { return pr.core_ids[sh.vertex_ids[v]]; };
    auto lift_edge = [&](int e) { return pr.core_edge_origin[sh.edge_origin[e]]; };

    if (static_cast<int>(comp.size()) == k) {
      // the Berge-C_k component case: a k-clique in the shadow at worst
      if (mode == ColorMode::strong) {
        for (int i = 0; i < k; ++i) col[lift_vertex(i)] = i;
      } else {
        Coloring wc = k <= 12 ? exact_weak_chromatic(sh.sub).coloring
                              : Coloring::of(
                                    [&] {
                                      std::vector<int> c(sh.sub.n);
                                      for (int i = 0; i < sh.sub.n; ++i) c[i] = i / 2;
                                      return c;
                                    }(),
                                    ColorMode::weak);
        if (wc.palette_size > weak_palette || !validate(sh.sub, wc).ok)
          return fail_with_certificate(std::nullopt);
        for (int i = 0; i < sh.sub.n; ++i) col[lift_vertex(i)] = wc.colors[i];
      }
      continue;
    }

    DfsTree t = dfs_build(sh.sub, 0);
    if (t.height > k - 1) {
      // the deep tree path is itself a Berge path witness
      int deep = t.preorder.front();
      for (int v : t.preorder)
        if (t.depth[v] > t.depth[deep]) deep = v;
      BergeWitness w;
      std::vector<int> chain;
      for (int v = deep; chain.size() < static_cast<size_t>(k + 1); v = t.parent[v]) chain.push_back(v);
      std::reverse(chain.begin(), chain.end());
      for (size_t i = 0; i + 1 < chain.size(); ++i)
        w.edge_map.push_back(lift_edge(t.parent_edge[chain[i + 1]]));
      for (int v : chain) w.vertex_map.push_back(lift_vertex(v));
      return fail_with_certificate(std::move(w));
    }

    try {
      Coloring cc = mode == ColorMode::strong ? dfs_color_strong(sh.sub, t, k)
                                              : dfs_color_weak(sh.sub, t, k);
      for (int v = 0; v < sh.sub.n; ++v) col[lift_vertex(v)] = cc.colors[v];
    } catch (const PaletteExceededError&) {
      return fail_with_certificate(std::nullopt);
    } catch (const InvalidColoringError&) {
      if (mode == ColorMode::weak && !sh.sub.is_uniform(3)) {
        // mixed {2,3} weak coloring carries no ceil(k/2) promise; fall
        // back to a plain greedy weak coloring of the component
        std::vector<int> gc(sh.sub.n, -1);
        std::vector<std::vector<int>> incident(sh.sub.n);
        for (int ei = 0; ei < sh.sub.edge_count(); ++ei)
          for (int x : sh.sub.edges[ei]) incident[x].push_back(ei);
        for (int v = 0; v < sh.sub.n; ++v) {
          std::vector<char> forbidden(sh.sub.n + 1, 0);
          for (int ei : incident[v]) {
            int mono = -1;
            bool all = true;
            for (int x : sh.sub.edges[ei]) {
              if (x == v) continue;
              if (gc[x] == -1) {
                all = false;
                break;
              }
              if (mono == -1) mono = gc[x];
              if (gc[x] != mono) all = false;
            }
            if (all && mono != -1) forbidden[mono] = 1;
          }
          int c = 0;
          while (forbidden[c]) ++c;
          gc[v] = c;
        }
        for (int v = 0; v < sh.sub.n; ++v) col[lift_vertex(v)] = gc[v];
      } else {
        return fail_with_certificate(std::nullopt);
      }
    }
  }

  // greedy re-add in reverse elimination order; each vertex had fewer
  // than k surviving shadow neighbors when peeled, and those are exactly
  // the ones colored before it comes back
  ShadowGraph sg = shadow(h);
  std::vector<std::vector<int>> incident(h.n);
  if (mode == ColorMode::weak)
    for (int ei = 0; ei < h.edge_count(); ++ei)
      for (int x : h.edges[ei]) incident[x].push_back(ei);

  for (auto it = pr.order.rbegin(); it != pr.order.rend(); ++it) {
    int v = *it;
    if (mode == ColorMode::strong) {
      std::vector<char> used(k + 1, 0);
      for (int u : sg.adj[v])
        if (col[u] != -1 && col[u] <= k) used[col[u]] = 1;
      int c = 0;
      while (used[c]) ++c;
      if (c >= k) return fail_with_certificate(std::nullopt);
      col[v] = c;
    } else {
      std::vector<char> forbidden(h.n + 1, 0);
      for (int ei : incident[v]) {
        int mono = -1;
        bool all = true;
        for (int x : h.edges[ei]) {
          if (x == v) continue;
          if (col[x] == -1) {
            all = false;
            break;
          }
          if (mono == -1) mono = col[x];
          if (col[x] != mono) all = false;
        }
        if (all && mono != -1) forbidden[mono] = 1;
      }
      int c = 0;
      while (forbidden[c]) ++c;
      if (three_uniform && c >= weak_palette) return fail_with_certificate(std::nullopt);
      col[v] = c;
    }
  }

  Coloring result = Coloring::of(std::move(col), mode);
  if (!validate(h, result).ok) return fail_with_certificate(std::nullopt);
  if (mode == ColorMode::strong && result.palette_size > k)
    return fail_with_certificate(std::nullopt);
  if (mode == ColorMode::weak && three_uniform && result.palette_size > weak_palette)
    return fail_with_certificate(std::nullopt);
  out.coloring = std::move(result);
  return out;
}

}  // namespace hypercolor
