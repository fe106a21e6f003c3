#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercolor/hypergraph.hpp"
#include "hypercolor/pattern.hpp"

namespace hypercolor {

namespace detail {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline void all_subsets(int n, int r, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(0);
}

// Every pair of vertices lies in exactly one edge.
inline void assert_pair_coverage(const Hypergraph& h, const char* who) {
  std::vector<std::vector<int>> count(h.n, std::vector<int>(h.n, 0));
  for (const auto& e : h.edges)
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) ++count[e[i]][e[j]];
  for (int u = 0; u < h.n; ++u)
    for (int v = u + 1; v < h.n; ++v)
      if (count[u][v] != 1)
        throw std::logic_error(std::string(who) + ": pair covered " +
                               std::to_string(count[u][v]) + " times");
}

}  // namespace detail

// All C(n,r) hyperedges on n vertices.
inline Hypergraph complete_r_graph(int n, int r) {
  if (r < 2 || r > n) throw std::invalid_argument("complete_r_graph: need 2 <= r <= n");
  std::vector<std::vector<int>> es;
  detail::all_subsets(n, r, es);
  return Hypergraph(n, std::move(es), r);
}

// r-expansion F^{(r)+}: each edge of F enlarged with r-2 fresh vertices,
// all the fresh sets disjoint.
inline Hypergraph expansion(const PatternGraph& f, int r) {
  if (r < 3) throw std::invalid_argument("expansion: r must be >= 3");
  std::vector<std::vector<int>> es;
  int next = f.n;
  for (auto [u, v] : f.edges) {
    std::vector<int> e = {u, v};
    for (int i = 0; i < r - 2; ++i) e.push_back(next++);
    es.push_back(std::move(e));
  }
  return Hypergraph(next, std::move(es), r);
}

// r-suspension S^r(F): the same r-2 apex vertices added to every edge.
inline Hypergraph suspension(const PatternGraph& f, int r) {
  if (r < 3) throw std::invalid_argument("suspension: r must be >= 3");
  std::vector<std::vector<int>> es;
  for (auto [u, v] : f.edges) {
    std::vector<int> e = {u, v};
    for (int i = 0; i < r - 2; ++i) e.push_back(f.n + i);
    es.push_back(std::move(e));
  }
  return Hypergraph(f.n + (r - 2), std::move(es), r);
}

// S_k^+: the 3-uniform expansion of the k-edge star, i.e. k triples that
// pairwise intersect exactly in the common center.
inline Hypergraph skplus(int k) { return expansion(star_pattern(k), 3); }

// PG(2,q) over the prime field GF(q): points are the normalized nonzero
// triples, lines are the point sets of the homogeneous equations.
struct ProjectivePlane {
  int q = 0;
  int point_count = 0;
  std::vector<std::vector<int>> lines;
};

inline ProjectivePlane projective_plane(int q) {
  if (!detail::is_prime(q))
    throw std::invalid_argument("projective_plane: order must be prime");
  // normalized representatives: (1,y,z), (0,1,z), (0,0,1)
  std::vector<std::array<int, 3>> pts;
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  ProjectivePlane p;
  p.q = q;
  p.point_count = static_cast<int>(pts.size());
  for (const auto& l : pts) {
    std::vector<int> line;
    for (int i = 0; i < p.point_count; ++i) {
      int s = l[0] * pts[i][0] + l[1] * pts[i][1] + l[2] * pts[i][2];
      if (s % q == 0) line.push_back(i);
    }
    if (static_cast<int>(line.size()) != q + 1)
      throw std::logic_error("projective_plane: line of wrong size");
    p.lines.push_back(std::move(line));
  }
  Hypergraph as_h(p.point_count, p.lines, q + 1);
  detail::assert_pair_coverage(as_h, "projective_plane");
  return p;
}

// The plane as a (q+1)-uniform hypergraph; q = 2 is the Fano plane.
inline Hypergraph plane_hypergraph(int q) {
  ProjectivePlane p = projective_plane(q);
  return Hypergraph(p.point_count, p.lines, q + 1);
}

// Two disjoint copies of PG(2,q) plus one u_i per line index; hyperedges
// are the 3-sets {u_i, x, y} over all pairs x,y inside b_i, the union of
// the i-th lines of the two copies.  clique holds both copies' point ids:
// the shadow restricted to them is complete.
struct SkplusLowerBound {
  Hypergraph hypergraph;
  std::vector<int> clique;
};

inline SkplusLowerBound skplus_lower_bound(int q) {
  ProjectivePlane p = projective_plane(q);
  int N = p.point_count;
  SkplusLowerBound out;
  std::vector<std::vector<int>> es;
  for (int i = 0; i < N; ++i) {
    std::vector<int> b;
    for (int x : p.lines[i]) b.push_back(x);
    for (int x : p.lines[i]) b.push_back(N + x);
    int u = 2 * N + i;
    for (size_t a = 0; a < b.size(); ++a)
      for (size_t c = a + 1; c < b.size(); ++c) es.push_back({u, b[a], b[c]});
  }
  std::set<std::vector<int>> dedup;
  std::vector<std::vector<int>> uniq;
  for (auto& e : es) {
    std::sort(e.begin(), e.end());
    if (dedup.insert(e).second) uniq.push_back(std::move(e));
  }
  out.hypergraph = Hypergraph(3 * N, std::move(uniq), 3);
  out.clique.resize(2 * N);
  std::iota(out.clique.begin(), out.clique.end(), 0);
  return out;
}

// Steiner triple system via the Bose construction, n = 6s+3 only.
// Points are (x,i) for x in Z_{2s+1}, i in {0,1,2}, with id 3x+i.
inline Hypergraph steiner_triple(int n) {
  if (n % 6 != 3)
    throw std::invalid_argument("steiner_triple: only n = 3 (mod 6) is supported");
  int m = n / 3;  // odd
  int s = (m - 1) / 2;
  auto id = [&](int x, int i) { return 3 * x + i; };
  auto half = [&](int v) { return (v * (s + 1)) % m; };  // (x+y)/2 in Z_m
  std::vector<std::vector<int>> es;
  for (int x = 0; x < m; ++x) es.push_back({id(x, 0), id(x, 1), id(x, 2)});
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        es.push_back({id(x, i), id(y, i), id(half(x + y), (i + 1) % 3)});
  Hypergraph h(n, std::move(es), 3);
  detail::assert_pair_coverage(h, "steiner_triple");
  return h;
}

// Disjoint relabeling: block i is shifted past the blocks before it.
inline Hypergraph disjoint_union(const std::vector<Hypergraph>& parts) {
  int n = 0, r = 2;
  std::vector<std::vector<int>> es;
  for (const auto& h : parts) {
    for (const auto& e : h.edges) {
      std::vector<int> f;
      for (int x : e) f.push_back(x + n);
      es.push_back(std::move(f));
    }
    n += h.n;
    r = std::max(r, h.r_max);
  }
  return Hypergraph(n, std::move(es), r);
}

// Seeded uniform sample of m distinct hyperedges.  uniform_size restricts
// every edge to exactly r_max vertices; otherwise sizes 2..r_max all occur.
inline Hypergraph random_hypergraph(int n, int m, int r_max, bool uniform_size,
                                    unsigned long long seed) {
  if (r_max < 2 || r_max > n)
    throw std::invalid_argument("random_hypergraph: need 2 <= r_max <= n");
  std::vector<std::vector<int>> pool;
  if (uniform_size) {
    detail::all_subsets(n, r_max, pool);
  } else {
    for (int r = 2; r <= r_max; ++r) detail::all_subsets(n, r, pool);
  }
  if (m > static_cast<int>(pool.size()))
    throw std::invalid_argument("random_hypergraph: fewer than m distinct hyperedges exist");
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates: the first m slots become the sample
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(m);
  return Hypergraph(n, std::move(pool), r_max);
}

}  // namespace hypercolor
