// Command-line front door: generate constructions, run the colorers and
// detectors, validate certificates, and emit bench tables.
//
// Exit codes: 0 valid/found, 1 invalid/absent, 2 parse or usage error,
// 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypercolor/bench.hpp"
#include "hypercolor/berge.hpp"
#include "hypercolor/coloring.hpp"
#include "hypercolor/constructions.hpp"
#include "hypercolor/dfs.hpp"
#include "hypercolor/io.hpp"
#include "hypercolor/oracle.hpp"

using namespace hypercolor;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAbsent = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << text;
}

std::string manifest_comment(const std::string& subcommand, const json& params) {
  json m;
  m["subcommand"] = subcommand;
  m["params"] = params;
  return "manifest: " + m.dump();
}

struct Args {
  std::string input;
  std::string output;
  std::string pattern;
  std::string spec;
  std::string certificate;
  std::string mode = "strong";
  std::string algo = "dfs";
  std::string sizes = "10000,100000,1000000";
  int k = 0;
  int threshold = 0;
  int bench_k = 5;
  int reps = 3;
  long long budget = 10'000'000;
  bool oracle = false;
};

ColorMode parse_mode(const std::string& s) {
  if (s == "strong") return ColorMode::strong;
  if (s == "weak") return ColorMode::weak;
  throw std::invalid_argument("mode must be 'strong' or 'weak'");
}

int run_gen(const Args& a) {
  Hypergraph h = generate_from_spec(a.spec);
  json params = {{"spec", a.spec}, {"n", h.n}, {"m", h.edge_count()}, {"r_max", h.r_max}};
  write_output(a.output, serialize_hgr(h, {manifest_comment("gen", params), "construction " + a.spec}));
  return kExitOk;
}

int run_color(const Args& a) {
  Hypergraph h = parse_hgr(read_input(a.input));
  ColorMode mode = parse_mode(a.mode);
  json params = {{"input", a.input}, {"mode", a.mode},   {"algo", a.algo},
                 {"k", a.k},         {"threshold", a.threshold}};

  if (a.algo == "dfs") {
    if (a.k < 3) throw std::invalid_argument("--algo dfs needs --k >= 3");
    if (!h.is_at_most(3))
      throw std::invalid_argument("--algo dfs needs a {2,3}-uniform hypergraph");
    DetectOptions opts;
    opts.node_budget = a.budget;
    PipelineResult res = color_bpk_free(h, a.k, mode, opts);
    if (!res.colored()) {
      write_output(a.output,
                   serialize_witness(*res.witness, {manifest_comment("color", params),
                                                    "berge path certificate, k=" + std::to_string(a.k)}));
      std::cerr << "not colorable within " << a.k << " colors: Berge path certificate emitted\n";
      return kExitAbsent;
    }
    write_output(a.output, serialize_coloring(*res.coloring, {manifest_comment("color", params)}));
    std::cerr << "palette " << res.coloring->palette_size << " valid " << a.mode << " coloring\n";
    return kExitOk;
  }

  if (a.algo == "peel") {
    if (mode != ColorMode::strong)
      throw std::invalid_argument("--algo peel colors in strong mode only");
    if (a.threshold < 1) throw std::invalid_argument("--algo peel needs --threshold >= 1");
    try {
      Coloring c = peel_color_strong(h, a.threshold);
      write_output(a.output, serialize_coloring(c, {manifest_comment("color", params)}));
      std::cerr << "palette " << c.palette_size << " valid strong coloring\n";
      return kExitOk;
    } catch (const NonemptyCoreError& e) {
      std::cerr << "nonempty core on " << e.core.n
                << " vertices: run a detector on it for a witness\n";
      return kExitAbsent;
    }
  }

  if (a.algo == "exact") {
    ChromaticResult r = mode == ColorMode::strong ? exact_strong_chromatic(h, a.budget)
                                                  : exact_weak_chromatic(h, a.budget);
    write_output(a.output, serialize_coloring(r.coloring, {manifest_comment("color", params)}));
    std::cerr << "chi = " << r.chi << " (" << a.mode << ")\n";
    return kExitOk;
  }
  throw std::invalid_argument("--algo must be dfs, peel or exact");
}

int run_detect(const Args& a) {
  Hypergraph h = parse_hgr(read_input(a.input));
  PatternGraph f = parse_pattern_spec(a.pattern);
  DetectOptions opts;
  opts.node_budget = a.budget;
  json params = {{"input", a.input}, {"pattern", a.pattern}};
  std::optional<BergeWitness> w = contains_berge(h, f, opts);
  if (!w) {
    std::cout << "absent\n";
    return kExitAbsent;
  }
  write_output(a.output, serialize_witness(*w, {manifest_comment("detect", params),
                                                "berge witness for " + a.pattern}));
  std::cerr << "found\n";
  return kExitOk;
}

int run_verify(const Args& a) {
  Hypergraph h = parse_hgr(read_input(a.input));

  if (a.oracle) {
    auto s = oracle::chromatic(h.n, h.edges, true);
    auto w = oracle::chromatic(h.n, h.edges, false);
    int es = exact_strong_chromatic(h).chi;
    int ew = exact_weak_chromatic(h).chi;
    std::cout << "strong engine " << es << " oracle " << s.value << " (" << s.enumerated
              << " assignments)\n";
    std::cout << "weak engine " << ew << " oracle " << w.value << " (" << w.enumerated
              << " assignments)\n";
    return (es == s.value && ew == w.value) ? kExitOk : kExitAbsent;
  }

  std::string text = read_input(a.certificate);
  // sniff the header keyword on the first content line
  std::string kind;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      kind = line.substr(i, line.find_first_of(" \t\r", i) - i);
      break;
    }
  }
  if (kind == "col") {
    std::istringstream in(text);
    Coloring c = parse_coloring(in, h.n);
    ValidationResult vr = validate(h, c);
    if (vr.ok) {
      std::cout << "valid " << to_string(c.mode) << " coloring, palette " << c.palette_size
                << "\n";
      return kExitOk;
    }
    std::cout << "invalid: hyperedge " << vr.violating_edge << " violates the "
              << to_string(c.mode) << " rule\n";
    return kExitAbsent;
  }
  if (kind == "bw") {
    if (a.pattern.empty())
      throw std::invalid_argument("verifying a witness needs --pattern");
    PatternGraph f = parse_pattern_spec(a.pattern);
    std::istringstream in(text);
    BergeWitness w = parse_witness(in);
    if (verify_witness(h, f, w)) {
      std::cout << "valid berge witness for " << a.pattern << "\n";
      return kExitOk;
    }
    std::cout << "invalid witness\n";
    return kExitAbsent;
  }
  throw ParseError(1, "certificate must start with 'col' or 'bw'");
}

int run_bench(const Args& a) {
  std::vector<long long> sizes;
  std::istringstream iss(a.sizes);
  std::string part;
  while (std::getline(iss, part, ','))
    sizes.push_back(detail::parse_spec_int(part, "size"));
  auto rows = bench_disjoint_cliques(a.bench_k, sizes, parse_mode(a.mode), a.reps);
  std::cout << "copies\tn\tm\tn_plus_m\tpalette\tmillis\n";
  for (const auto& r : rows)
    std::cout << r.copies << "\t" << r.n << "\t" << r.m << "\t" << r.size << "\t" << r.palette
              << "\t" << r.millis << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergraph coloring toolkit"};
  app.require_subcommand(1);
  Args a;

  CLI::App* gen = app.add_subcommand("gen", "generate a construction as an HGR file");
  gen->add_option("spec", a.spec, "construction spec, e.g. clique:5x3, fano, sts:9")->required();
  gen->add_option("-o,--output", a.output, "output path (default stdout)");

  CLI::App* color = app.add_subcommand("color", "color a hypergraph");
  color->add_option("input", a.input, "HGR file or - for stdin")->required();
  color->add_option("--mode", a.mode, "strong or weak")->capture_default_str();
  color->add_option("--algo", a.algo, "dfs, peel or exact")->capture_default_str();
  color->add_option("--k", a.k, "palette bound for --algo dfs");
  color->add_option("--threshold", a.threshold, "peeling threshold for --algo peel");
  color->add_option("--budget", a.budget, "search node budget")->capture_default_str();
  color->add_option("-o,--output", a.output, "output path (default stdout)");

  CLI::App* detect = app.add_subcommand("detect", "search for a Berge copy of a pattern");
  detect->add_option("input", a.input, "HGR file or - for stdin")->required();
  detect->add_option("--pattern", a.pattern, "pattern spec, e.g. path:4 or 'pg 3 0-1 1-2'")
      ->required();
  detect->add_option("--budget", a.budget, "search node budget")->capture_default_str();
  detect->add_option("-o,--output", a.output, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "check a coloring or witness certificate");
  verify->add_option("input", a.input, "HGR file or - for stdin")->required();
  verify->add_option("certificate", a.certificate, "coloring or witness file");
  verify->add_option("--pattern", a.pattern, "pattern spec for witness certificates");
  verify->add_flag("--oracle", a.oracle, "cross-check the exact engines against enumeration");

  CLI::App* bench = app.add_subcommand("bench", "time the pipeline on disjoint clique families");
  bench->add_option("--k", a.bench_k, "clique size")->capture_default_str();
  bench->add_option("--sizes", a.sizes, "comma-separated n+m targets")->capture_default_str();
  bench->add_option("--mode", a.mode, "strong or weak")->capture_default_str();
  bench->add_option("--reps", a.reps, "repetitions per size, best kept")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(a);
    if (color->parsed()) return run_color(a);
    if (detect->parsed()) return run_detect(a);
    if (verify->parsed()) {
      if (!a.oracle && a.certificate.empty())
        throw std::invalid_argument("verify needs a certificate file or --oracle");
      return run_verify(a);
    }
    if (bench->parsed()) return run_bench(a);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
