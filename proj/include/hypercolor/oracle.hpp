#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypercolor::oracle {

// Cross-validation oracles.  These deliberately share no code or data
// layout with the engines: plain vectors in, full enumeration inside.

struct OracleReport {
  std::string quantity;
  long long value = 0;
  long long enumerated = 0;
  double millis = 0;
};

namespace detail {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace detail

// Minimum palette over all complete assignments, enumerated as restricted
// growth strings (one representative per color-class partition, Bell(n)
// of them).  strong: every edge all-distinct; weak: no edge all-equal.
inline OracleReport chromatic(int n, const std::vector<std::vector<int>>& edges, bool strong) {
  if (strong && n > 12) throw std::invalid_argument("oracle chromatic: strong cap is n <= 12");
  if (!strong && n > 10) throw std::invalid_argument("oracle chromatic: weak cap is n <= 10");
  detail::Stopwatch sw;
  OracleReport rep;
  rep.quantity = strong ? "strong chromatic" : "weak chromatic";
  std::vector<int> assign(n, 0);
  long long best = n == 0 ? 0 : n + 1;

  auto valid = [&]() {
    for (const auto& e : edges) {
      if (strong) {
        for (size_t i = 0; i < e.size(); ++i)
          for (size_t j = i + 1; j < e.size(); ++j)
            if (assign[e[i]] == assign[e[j]]) return false;
      } else {
        bool mono = true;
        for (int v : e)
          if (assign[v] != assign[e[0]]) {
            mono = false;
            break;
          }
        if (mono) return false;
      }
    }
    return true;
  };

  std::function<void(int, int)> rec = [&](int i, int maxc) {
    if (i == n) {
      ++rep.enumerated;
      if (valid()) best = std::min(best, static_cast<long long>(maxc + 1));
      return;
    }
    for (int c = 0; c <= maxc + 1; ++c) {
      assign[i] = c;
      rec(i + 1, std::max(maxc, c));
    }
  };
  rec(0, -1);
  if (n == 0) rep.enumerated = 1;
  rep.value = best;
  rep.millis = sw.ms();
  return rep;
}

// Berge containment by total enumeration: every injective vertex map,
// and for each every injective edge assignment, checked directly.
// When the pattern has more vertices than the host there are no maps and
// the answer is already exact, caps notwithstanding.
inline OracleReport berge(int hn, const std::vector<std::vector<int>>& hedges, int fn,
                          const std::vector<std::pair<int, int>>& fedges) {
  detail::Stopwatch sw;
  OracleReport rep;
  rep.quantity = "berge containment";
  if (fn > hn) {
    rep.value = 0;
    rep.millis = sw.ms();
    return rep;
  }
  if (fedges.size() > 5) throw std::invalid_argument("oracle berge: cap is |E(F)| <= 5");
  if (hedges.size() > 8) throw std::invalid_argument("oracle berge: cap is m <= 8");

  std::vector<int> vmap(fn, -1);
  std::vector<char> vused(hn, 0);
  std::vector<char> eused(hedges.size(), 0);
  bool found = false;

  auto contains = [&](const std::vector<int>& e, int x) {
    for (int y : e)
      if (y == x) return true;
    return false;
  };

  std::function<bool(size_t)> assign_edges = [&](size_t i) {
    if (i == fedges.size()) return true;
    for (size_t he = 0; he < hedges.size(); ++he) {
      if (eused[he]) continue;
      if (!contains(hedges[he], vmap[fedges[i].first])) continue;
      if (!contains(hedges[he], vmap[fedges[i].second])) continue;
      eused[he] = 1;
      if (assign_edges(i + 1)) return true;
      eused[he] = 0;
    }
    return false;
  };

  std::function<void(int)> place = [&](int u) {
    if (u == fn) {
      ++rep.enumerated;
      if (!found && assign_edges(0)) found = true;
      return;
    }
    for (int x = 0; x < hn && !found; ++x) {
      if (vused[x]) continue;
      vmap[u] = x;
      vused[x] = 1;
      place(u + 1);
      vused[x] = 0;
    }
  };
  place(0);
  rep.value = found ? 1 : 0;
  rep.millis = sw.ms();
  return rep;
}

// Maximum matching size by pick/skip enumeration over the edge list.
inline OracleReport matching(int n, const std::vector<std::pair<int, int>>& edges) {
  if (edges.size() > 16) throw std::invalid_argument("oracle matching: cap is 16 edges");
  detail::Stopwatch sw;
  OracleReport rep;
  rep.quantity = "maximum matching";
  std::vector<char> used(n, 0);
  std::function<long long(size_t)> rec = [&](size_t i) -> long long {
    ++rep.enumerated;
    if (i == edges.size()) return 0;
    long long best = rec(i + 1);  // skip
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      best = std::max(best, 1 + rec(i + 1));
      used[u] = used[v] = 0;
    }
    return best;
  };
  rep.value = rec(0);
  rep.millis = sw.ms();
  return rep;
}

}  // namespace hypercolor::oracle
