#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypercolor/berge.hpp"
#include "hypercolor/coloring.hpp"
#include "hypercolor/constructions.hpp"
#include "hypercolor/errors.hpp"
#include "hypercolor/hypergraph.hpp"
#include "hypercolor/pattern.hpp"

namespace hypercolor {

// Text formats.  All of them use LF line endings, allow `#` comment lines
// and blank lines anywhere, and report parse failures with line numbers.
//
//   HGR       line 1: `hgr <n> <m> <r_max>`, then m edge lines of
//             strictly increasing 0-based vertex ids.
//   coloring  line 1: `col <strong|weak> <palette>`, then `<v> <c>` per
//             vertex.
//   witness   line 1: `bw`, then `v <pattern-vertex> <host-vertex>` and
//             `e <pattern-edge-index> <host-edge-index>` lines.

namespace detail {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // next content line (comments and blanks skipped); false at eof
  bool next(std::string& out) {
    std::string s;
    while (std::getline(in, s)) {
      ++line_no;
      size_t i = s.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (s[i] == '#') continue;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      out = s;
      return true;
    }
    return false;
  }
};

inline long long parse_int(const std::string& tok, int line, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
  }
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream iss(s);
  std::vector<std::string> out;
  std::string t;
  while (iss >> t) out.push_back(t);
  return out;
}

// for command-line spec strings, where there is no line to point at
inline long long parse_spec_int(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("expected an integer for ") + what + ", got '" +
                                tok + "'");
  }
}

}  // namespace detail

inline std::string serialize_hgr(const Hypergraph& h,
                                 const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "hgr " << h.n << " " << h.edge_count() << " " << h.r_max << "\n";
  for (const auto& e : h.edges) {
    for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << "\n";
  }
  return os.str();
}

inline Hypergraph parse_hgr(std::istream& in) {
  detail::LineReader rd{in};
  std::string s;
  if (!rd.next(s)) throw ParseError(rd.line_no, "missing hgr header");
  auto head = detail::tokens(s);
  if (head.size() != 4 || head[0] != "hgr")
    throw ParseError(rd.line_no, "expected header 'hgr <n> <m> <r_max>'");
  int n = static_cast<int>(detail::parse_int(head[1], rd.line_no, "n"));
  int m = static_cast<int>(detail::parse_int(head[2], rd.line_no, "m"));
  int r_max = static_cast<int>(detail::parse_int(head[3], rd.line_no, "r_max"));
  if (n < 0 || m < 0 || r_max < 2) throw ParseError(rd.line_no, "bad header values");
  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < m; ++i) {
    if (!rd.next(s)) throw ParseError(rd.line_no, "expected " + std::to_string(m) +
                                                     " hyperedges, file ended after " +
                                                     std::to_string(i));
    auto toks = detail::tokens(s);
    std::vector<int> e;
    for (const auto& t : toks)
      e.push_back(static_cast<int>(detail::parse_int(t, rd.line_no, "vertex id")));
    if (e.size() < 2) throw ParseError(rd.line_no, "hyperedge needs at least 2 vertices");
    if (static_cast<int>(e.size()) > r_max)
      throw ParseError(rd.line_no, "hyperedge larger than r_max");
    for (size_t j = 0; j + 1 < e.size(); ++j)
      if (e[j] >= e[j + 1])
        throw ParseError(rd.line_no, "vertex ids must be strictly increasing");
    if (e.front() < 0 || e.back() >= n) throw ParseError(rd.line_no, "vertex id out of range");
    if (!seen.insert(e).second) throw ParseError(rd.line_no, "duplicate hyperedge");
    edges.push_back(std::move(e));
  }
  if (rd.next(s)) throw ParseError(rd.line_no, "trailing content after the last hyperedge");
  return Hypergraph(n, std::move(edges), r_max);
}

inline Hypergraph parse_hgr(const std::string& text) {
  std::istringstream in(text);
  return parse_hgr(in);
}

inline std::string serialize_coloring(const Coloring& c,
                                      const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& cm : comments) os << "# " << cm << "\n";
  os << "col " << to_string(c.mode) << " " << c.palette_size << "\n";
  for (size_t v = 0; v < c.colors.size(); ++v) os << v << " " << c.colors[v] << "\n";
  return os.str();
}

inline Coloring parse_coloring(std::istream& in, int n) {
  detail::LineReader rd{in};
  std::string s;
  if (!rd.next(s)) throw ParseError(rd.line_no, "missing col header");
  auto head = detail::tokens(s);
  if (head.size() != 3 || head[0] != "col")
    throw ParseError(rd.line_no, "expected header 'col <strong|weak> <palette>'");
  ColorMode mode;
  if (head[1] == "strong")
    mode = ColorMode::strong;
  else if (head[1] == "weak")
    mode = ColorMode::weak;
  else
    throw ParseError(rd.line_no, "mode must be 'strong' or 'weak'");
  int palette = static_cast<int>(detail::parse_int(head[2], rd.line_no, "palette"));
  std::vector<int> colors(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!rd.next(s)) throw ParseError(rd.line_no, "coloring is not total: expected " +
                                                     std::to_string(n) + " vertex lines");
    auto toks = detail::tokens(s);
    if (toks.size() != 2) throw ParseError(rd.line_no, "expected '<vertex> <color>'");
    int v = static_cast<int>(detail::parse_int(toks[0], rd.line_no, "vertex"));
    int c = static_cast<int>(detail::parse_int(toks[1], rd.line_no, "color"));
    if (v < 0 || v >= n) throw ParseError(rd.line_no, "vertex id out of range");
    if (colors[v] != -1) throw ParseError(rd.line_no, "vertex colored twice");
    if (c < 0 || c >= palette) throw ParseError(rd.line_no, "color outside the palette");
    colors[v] = c;
  }
  if (rd.next(s)) throw ParseError(rd.line_no, "trailing content after the coloring");
  Coloring out = Coloring::of(std::move(colors), mode);
  if (out.palette_size != palette)
    throw ParseError(rd.line_no, "declared palette " + std::to_string(palette) +
                                     " does not match the colors used");
  return out;
}

inline std::string serialize_witness(const BergeWitness& w,
                                     const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& cm : comments) os << "# " << cm << "\n";
  os << "bw\n";
  for (size_t i = 0; i < w.vertex_map.size(); ++i) os << "v " << i << " " << w.vertex_map[i] << "\n";
  for (size_t i = 0; i < w.edge_map.size(); ++i) os << "e " << i << " " << w.edge_map[i] << "\n";
  return os.str();
}

inline BergeWitness parse_witness(std::istream& in) {
  detail::LineReader rd{in};
  std::string s;
  if (!rd.next(s)) throw ParseError(rd.line_no, "missing bw header");
  auto head = detail::tokens(s);
  if (head.size() != 1 || head[0] != "bw") throw ParseError(rd.line_no, "expected header 'bw'");
  std::vector<std::pair<int, int>> vs, es;
  while (rd.next(s)) {
    auto toks = detail::tokens(s);
    if (toks.size() != 3 || (toks[0] != "v" && toks[0] != "e"))
      throw ParseError(rd.line_no, "expected 'v <i> <x>' or 'e <i> <j>'");
    int i = static_cast<int>(detail::parse_int(toks[1], rd.line_no, "index"));
    int x = static_cast<int>(detail::parse_int(toks[2], rd.line_no, "target"));
    (toks[0] == "v" ? vs : es).emplace_back(i, x);
  }
  BergeWitness w;
  w.vertex_map.assign(vs.size(), -1);
  w.edge_map.assign(es.size(), -1);
  for (auto [i, x] : vs) {
    if (i < 0 || i >= static_cast<int>(vs.size()) || w.vertex_map[i] != -1)
      throw ParseError(0, "vertex map indices must be 0..n-1, each once");
    w.vertex_map[i] = x;
  }
  for (auto [i, x] : es) {
    if (i < 0 || i >= static_cast<int>(es.size()) || w.edge_map[i] != -1)
      throw ParseError(0, "edge map indices must be 0..m-1, each once");
    w.edge_map[i] = x;
  }
  return w;
}

// Pattern specs: `path:k`, `cycle:k`, `star:k`, `spider:k`, `dstar:t,k`,
// `broom:t,k`, `complete:k` (the complete graph), or the one-line
// `pg <n> <u-v> <u-v> ...` form.
inline PatternGraph parse_pattern_spec(const std::string& spec) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("pattern spec '" + spec + "': " + why);
  };
  if (spec.rfind("pg", 0) == 0) {
    auto toks = detail::tokens(spec);
    if (toks.size() < 2) throw bad("expected 'pg <n> <u-v> ...'");
    int n = static_cast<int>(detail::parse_spec_int(toks[1], "n"));
    std::vector<std::pair<int, int>> es;
    for (size_t i = 2; i < toks.size(); ++i) {
      size_t dash = toks[i].find('-');
      if (dash == std::string::npos) throw bad("edge token must be '<u>-<v>'");
      int u = static_cast<int>(detail::parse_spec_int(toks[i].substr(0, dash), "u"));
      int v = static_cast<int>(detail::parse_spec_int(toks[i].substr(dash + 1), "v"));
      es.emplace_back(u, v);
    }
    PatternGraph p(n, std::move(es));
    std::set<std::pair<int, int>> seen;
    for (auto e : p.edges)
      if (!seen.insert(e).second) throw bad("duplicate edge");
    return p;
  }
  size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::istringstream iss(rest);
    std::string part;
    while (std::getline(iss, part, ','))
      args.push_back(static_cast<int>(detail::parse_spec_int(part, "pattern parameter")));
  }
  auto arg1 = [&]() {
    if (args.size() != 1) throw bad("expected one parameter");
    return args[0];
  };
  auto arg2 = [&]() {
    if (args.size() != 2) throw bad("expected two parameters");
    return std::make_pair(args[0], args[1]);
  };
  if (name == "path") return path_pattern(arg1());
  if (name == "cycle") return cycle_pattern(arg1());
  if (name == "star") return star_pattern(arg1());
  if (name == "spider") return spider_pattern(arg1());
  if (name == "dstar") {
    auto [t, k] = arg2();
    return dstar_pattern(t, k);
  }
  if (name == "broom") {
    auto [t, k] = arg2();
    return broom_pattern(t, k);
  }
  if (name == "complete") {
    int k = arg1();
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    return PatternGraph(k, std::move(es));
  }
  throw bad("unknown pattern name");
}

// Generator specs for the gen subcommand:
//   clique:k[xC]      one or C disjoint complete 3-graphs on k vertices
//   complete:n,r      the complete r-graph on n vertices
//   fano              the Fano plane (= plane:2)
//   plane:q           PG(2,q) as a (q+1)-uniform hypergraph, q prime
//   skplus:k          the star expansion S_k^+
//   skplus_lb:q       the two-plane lower-bound construction
//   sts:n             Steiner triple system, n = 3 mod 6
//   expansion:<pattern>,r   /  suspension:<pattern>,r
//   random:n,m,rmax,seed[,uniform]
inline Hypergraph generate_from_spec(const std::string& spec) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("gen spec '" + spec + "': " + why);
  };
  size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (name == "fano") return plane_hypergraph(2);
  if (name == "clique") {
    int copies = 1;
    size_t x = rest.find('x');
    if (x != std::string::npos) {
      copies = static_cast<int>(detail::parse_spec_int(rest.substr(x + 1), "copies"));
      rest = rest.substr(0, x);
    }
    int k = static_cast<int>(detail::parse_spec_int(rest, "k"));
    if (copies < 1) throw bad("copies must be >= 1");
    std::vector<Hypergraph> parts(copies, complete_r_graph(k, 3));
    return disjoint_union(parts);
  }

  std::vector<std::string> parts;
  {
    std::istringstream iss(rest);
    std::string p;
    while (std::getline(iss, p, ',')) parts.push_back(p);
  }
  auto ints = [&]() {
    std::vector<long long> out;
    for (const auto& p : parts) out.push_back(detail::parse_spec_int(p, "parameter"));
    return out;
  };

  if (name == "complete") {
    auto a = ints();
    if (a.size() != 2) throw bad("expected complete:n,r");
    return complete_r_graph(static_cast<int>(a[0]), static_cast<int>(a[1]));
  }
  if (name == "plane") {
    auto a = ints();
    if (a.size() != 1) throw bad("expected plane:q");
    return plane_hypergraph(static_cast<int>(a[0]));
  }
  if (name == "skplus") {
    auto a = ints();
    if (a.size() != 1) throw bad("expected skplus:k");
    return skplus(static_cast<int>(a[0]));
  }
  if (name == "skplus_lb") {
    auto a = ints();
    if (a.size() != 1) throw bad("expected skplus_lb:q");
    return skplus_lower_bound(static_cast<int>(a[0])).hypergraph;
  }
  if (name == "sts") {
    auto a = ints();
    if (a.size() != 1) throw bad("expected sts:n");
    return steiner_triple(static_cast<int>(a[0]));
  }
  if (name == "expansion" || name == "suspension") {
    if (parts.size() < 2) throw bad("expected " + name + ":<pattern>,r");
    int r = static_cast<int>(detail::parse_spec_int(parts.back(), "r"));
    std::string pat = rest.substr(0, rest.rfind(','));
    PatternGraph f = parse_pattern_spec(pat);
    return name == "expansion" ? expansion(f, r) : suspension(f, r);
  }
  if (name == "random") {
    bool uniform = !parts.empty() && parts.back() == "uniform";
    if (uniform) parts.pop_back();
    auto a = ints();
    if (a.size() != 4) throw bad("expected random:n,m,rmax,seed[,uniform]");
    return random_hypergraph(static_cast<int>(a[0]), static_cast<int>(a[1]),
                             static_cast<int>(a[2]), uniform,
                             static_cast<unsigned long long>(a[3]));
  }
  throw bad("unknown generator name");
}

}  // namespace hypercolor
