#include "doctest.h"

#include <set>

#include "hypercolor/hypergraph.hpp"
#include "hypercolor/oracle.hpp"
#include "test_support.hpp"

using namespace hypercolor;
using ts::hg;

TEST_CASE("construction enforces the hyperedge invariants") {
  CHECK_THROWS_AS(hg(3, {{0}}), std::invalid_argument);              // size-1 edge
  CHECK_THROWS_AS(hg(3, {{0, 1, 2}, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(hg(3, {{0, 3}}), std::invalid_argument);           // id out of range
  CHECK_THROWS_AS(hg(4, {{0, 1, 2, 3}}, 3), std::invalid_argument);  // above r_max
  CHECK_THROWS_AS(hg(3, {{1, 1}}), std::invalid_argument);           // repeated vertex
  Hypergraph h = hg(3, {{2, 0, 1}});  // unsorted input is normalized
  CHECK(h.edges[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("shadow of a single 3-edge is a triangle") {
  ShadowGraph g = shadow(hg(3, {{0, 1, 2}}));
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      CHECK(g.adjacent(u, v) == (u != v));
}

TEST_CASE("shadow of the complete 3-graph on 5 vertices is K_5") {
  ShadowGraph g = shadow(complete_r_graph(5, 3));
  for (int u = 0; u < 5; ++u) CHECK(g.degree(u) == 4);
}

TEST_CASE("shadow of two disjoint 2-edges") {
  ShadowGraph g = shadow(hg(4, {{0, 1}, {2, 3}}));
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK(g.total_edges() == 2);
}

TEST_CASE("shadow equals the union of in-edge pairs on random instances") {
  ts::InstanceGen gen(1001);
  for (int it = 0; it < 60; ++it) {
    Hypergraph h = gen.next(8, 10, 3, false);
    ShadowGraph g = shadow(h);
    for (int u = 0; u < h.n; ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (int v = 0; v < h.n; ++v) {
        bool expect = false;
        for (const auto& e : h.edges) {
          bool fu = std::binary_search(e.begin(), e.end(), u);
          bool fv = std::binary_search(e.begin(), e.end(), v);
          if (fu && fv && u != v) expect = true;
        }
        CHECK(g.adjacent(u, v) == expect);
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      }
    }
  }
}

TEST_CASE("link re-indexes onto the neighborhood") {
  // v=0, a=1, b=2, c=3, d=4
  LinkView lv = link(hg(5, {{0, 1, 2}, {0, 3, 4}}), 0);
  CHECK(lv.vertex_ids == std::vector<int>{1, 2, 3, 4});
  CHECK(lv.link.edges == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(lv.pair_neighbors.empty());
}

TEST_CASE("link of a vertex of the complete 3-graph on 4 vertices is a triangle") {
  LinkView lv = link(complete_r_graph(4, 3), 0);
  CHECK(lv.link.n == 3);
  CHECK(lv.link.edge_count() == 3);
}

TEST_CASE("2-edges through the vertex are reported, not stored") {
  LinkView lv = link(hg(2, {{0, 1}}), 0);
  CHECK(lv.link.edge_count() == 0);
  CHECK(lv.pair_neighbors == std::vector<int>{1});
  CHECK(lv.vertex_ids == std::vector<int>{1});
  CHECK_THROWS_AS(link(hg(2, {{0, 1}}), 5), std::invalid_argument);
}

TEST_CASE("degree profile of the complete 3-graph on 5 vertices") {
  Hypergraph h = complete_r_graph(5, 3);
  for (int v = 0; v < 5; ++v) {
    DegreeProfile p = degrees(h, v);
    CHECK(p.d == 6);
    CHECK(p.d_n == 4);
    CHECK(p.d_m == 2);
  }
}

TEST_CASE("degree profile of a 2-edge bowtie and an isolated vertex") {
  DegreeProfile p = degrees(hg(5, {{0, 1, 2}, {0, 3, 4}}), 0);
  CHECK(p.d == 2);
  CHECK(p.d_n == 4);
  CHECK(p.d_m == 2);
  DegreeProfile iso = degrees(hg(3, {{0, 1}}), 2);
  CHECK(iso.d == 0);
  CHECK(iso.d_n == 0);
  CHECK(iso.d_m == 0);
}

TEST_CASE("d_n equals the shadow degree everywhere") {
  ts::InstanceGen gen(1002);
  for (int it = 0; it < 40; ++it) {
    Hypergraph h = gen.next(9, 12, 4, false);
    ShadowGraph g = shadow(h);
    for (int v = 0; v < h.n; ++v) CHECK(degrees(h, v).d_n == g.degree(v));
  }
}

TEST_CASE("d_m matches the pick/skip matching oracle on 3-uniform links") {
  ts::InstanceGen gen(1003);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    Hypergraph h = gen.next(8, 10, 3, true);
    for (int v = 0; v < h.n; ++v) {
      LinkView lv = link(h, v);
      if (lv.link.edge_count() > 10) continue;
      std::vector<std::pair<int, int>> es;
      for (const auto& e : lv.link.edges) es.emplace_back(e[0], e[1]);
      CHECK(degrees(h, v).d_m == oracle::matching(lv.link.n, es).value);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("delete_vertex truncates, drops singletons and merges duplicates") {
  VertexDeletion d1 = delete_vertex(hg(3, {{0, 1, 2}}), 2);
  CHECK(d1.result.n == 2);
  CHECK(d1.result.edges == std::vector<std::vector<int>>{{0, 1}});

  VertexDeletion d2 = delete_vertex(hg(3, {{0, 1}, {0, 1, 2}}), 2);
  CHECK(d2.result.edges == std::vector<std::vector<int>>{{0, 1}});

  VertexDeletion d3 = delete_vertex(hg(2, {{0, 1}}), 1);
  CHECK(d3.result.n == 1);
  CHECK(d3.result.edge_count() == 0);
  CHECK(d3.old_ids == std::vector<int>{0});

  VertexDeletion d4 = delete_vertex(hg(4, {{1, 2, 3}}), 0);
  CHECK(d4.result.edges == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(d4.old_ids == std::vector<int>{1, 2, 3});
}

TEST_CASE("components split along the shadow") {
  auto comps = components(hg(5, {{0, 1, 2}, {3, 4}}));
  CHECK(comps == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});
  CHECK(components(complete_r_graph(4, 3)).size() == 1);
  CHECK(components(hg(3, {})).size() == 3);
}

TEST_CASE("components partition the vertex set and no hyperedge crosses") {
  ts::InstanceGen gen(1004);
  for (int it = 0; it < 40; ++it) {
    Hypergraph h = gen.next(9, 10, 3, false);
    auto comps = components(h);
    std::vector<int> owner(h.n, -1);
    int total = 0;
    for (size_t ci = 0; ci < comps.size(); ++ci)
      for (int v : comps[ci]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(ci);
        ++total;
      }
    CHECK(total == h.n);
    for (const auto& e : h.edges)
      for (int x : e) CHECK(owner[x] == owner[e[0]]);
  }
}

TEST_CASE("peel of the complete 3-graph on 5 vertices") {
  Hypergraph h = complete_r_graph(5, 3);
  PeelResult everything = peel(h, 5);
  CHECK(everything.order.size() == 5);
  CHECK(everything.core_empty());

  PeelResult nothing = peel(h, 4);
  CHECK(nothing.order.empty());
  CHECK(nothing.core.n == 5);
  CHECK(nothing.core.edges == h.edges);
  CHECK(nothing.core_ids == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("star-shaped instance peels leaves first and then collapses") {
  Hypergraph h = hg(5, {{0, 1, 2}, {0, 3, 4}});  // center 0
  PeelResult p = peel(h, 3);
  CHECK(p.order.size() == 5);
  CHECK(p.core_empty());
  CHECK(p.order.front() != 0);  // a leaf goes first, the center survives it
}

TEST_CASE("peel re-simulation: below threshold when removed, at or above in the core") {
  ts::InstanceGen gen(1005);
  for (int it = 0; it < 50; ++it) {
    Hypergraph h = gen.next(9, 12, 3, false);
    int t = gen.pick(1, 5);
    PeelResult p = peel(h, t);
    std::vector<char> alive(h.n, 1);
    for (int v : p.order) {
      std::set<int> nbrs;
      for (const auto& e : h.edges)
        if (std::binary_search(e.begin(), e.end(), v))
          for (int x : e)
            if (x != v && alive[x]) nbrs.insert(x);
      CHECK(static_cast<int>(nbrs.size()) < t);
      alive[v] = 0;
    }
    ShadowGraph cg = shadow(p.core);
    for (int v = 0; v < p.core.n; ++v) CHECK(cg.degree(v) >= t);
    CHECK(p.order.size() + p.core_ids.size() == static_cast<size_t>(h.n));
    for (size_t i = 0; i < p.core_edge_origin.size(); ++i) {
      // every core edge sits inside its originating hyperedge
      const auto& orig = h.edges[p.core_edge_origin[i]];
      for (int x : p.core.edges[i])
        CHECK(std::binary_search(orig.begin(), orig.end(), p.core_ids[x]));
    }
  }
}

TEST_CASE("induced sub-hypergraph keeps inside edges with origins") {
  Hypergraph h = hg(6, {{0, 1, 2}, {2, 3, 4}, {4, 5}});
  SubHypergraph s = induced_sub_hypergraph(h, {2, 3, 4});
  CHECK(s.sub.n == 3);
  CHECK(s.sub.edges == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(s.edge_origin == std::vector<int>{1});
}
