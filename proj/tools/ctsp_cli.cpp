// Command-line driver: tour, corpus, analyze, decompose, oracle, dot.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ctsp/error.hpp"
#include "ctsp/generators.hpp"
#include "ctsp/graph_io.hpp"
#include "ctsp/matching.hpp"
#include "ctsp/oracle.hpp"
#include "ctsp/pipeline.hpp"
#include "ctsp/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ctsp;
using nlohmann::json;

namespace {

struct Common {
  std::string format;
  std::string mode = "auto";
  bool trace = false;
};

std::vector<Graph> read_input(const std::string& path, const std::string& format) {
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    const auto fmt = parse_format_name(format.empty() ? "g6" : format);
    if (fmt == GraphFormat::graph6) return parse_graph6_lines(text);
    return {parse_graph(text, fmt)};
  }
  return read_graph_file(path, format);
}

Graph read_one(const std::string& path, const std::string& format) {
  auto gs = read_input(path, format);
  if (gs.empty()) throw ParseError("no graph in input", 0, true);
  return gs.front();
}

PipelineOptions options_of(const Common& c) {
  PipelineOptions o;
  o.mode = parse_select_mode(c.mode);
  if (c.trace) o.trace = [](const std::string& s) { std::cerr << "[trace] " << s << "\n"; };
  return o;
}

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c == '\n' ? ' ' : c);
  return out + "\"";
}

struct Row {
  std::string source;
  int n = 0;
  int length = -1;
  std::string bound;
  int optimum = -1;
  int p1 = 0, p2 = 0, reductions = 0;
  std::string audit = "-";
  bool pass = false;
  std::string note;
};

Row run_row(const std::string& source, const Graph& g, const PipelineOptions& opts, bool with_oracle) {
  Row row;
  row.source = source;
  row.n = g.order();
  try {
    const auto r = run_pipeline(g, opts);
    row.length = r.tour.length;
    row.bound = r.report.bound.str();
    for (const auto& [k, v] : r.phase1_swaps) row.p1 += v;
    for (const auto& [k, v] : r.phase2_swaps) row.p2 += v;
    row.reductions = static_cast<int>(r.chain.steps.size());
    if (r.audit) row.audit = r.audit->ok() ? "ok" : std::to_string(r.audit->failures.size()) + " failures";
    row.pass = r.ok();
    for (const auto& c : r.certificates)
      if (!c.pass) row.note = c.name;
    if (with_oracle && g.order() <= oracle::kTspLimit) row.optimum = oracle::optimal_graphic_tsp(g);
  } catch (const std::exception& e) {
    row.note = e.what();
  }
  return row;
}

int cmd_tour(const std::string& input, const Common& c, bool dump) {
  const Graph g = read_one(input, c.format);
  const auto r = run_pipeline(g, options_of(c));
  auto j = pipeline_json(g, r);
  if (dump) j["reduction_records"] = reductions_json(r.chain);
  std::cout << j.dump(2) << "\n";
  return r.ok() ? 0 : 1;
}

int cmd_corpus(const std::vector<std::string>& inputs, const std::vector<std::string>& specs, int random_n,
               int random_count, std::uint64_t seed, int jobs, bool with_oracle, const Common& c, bool as_json) {
  std::vector<std::pair<std::string, Graph>> work;
  for (const auto& in : inputs) {
    std::vector<std::string> files;
    if (std::filesystem::is_directory(in)) {
      for (const auto& e : std::filesystem::directory_iterator(in))
        if (e.is_regular_file()) files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
    } else {
      files.push_back(in);
    }
    for (const auto& f : files) {
      const auto gs = read_input(f, c.format);
      for (std::size_t i = 0; i < gs.size(); ++i) work.push_back({f + "#" + std::to_string(i), gs[i]});
    }
  }
  for (const auto& s : specs) work.push_back({s, generate(s)});
  for (int i = 0; i < random_count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    work.push_back({"random:" + std::to_string(random_n) + ":" + std::to_string(s), random_cubic_bridgeless(random_n, s)});
  }

  auto opts = options_of(c);
  opts.trace = nullptr;
  std::vector<Row> rows(work.size());
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(work.size()); ++i)
    rows[i] = run_row(work[i].first, work[i].second, opts, with_oracle);

  int passed = 0;
  for (const auto& r : rows) passed += r.pass;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"source", r.source},
                     {"n", r.n},
                     {"length", r.length},
                     {"bound", r.bound},
                     {"optimum", r.optimum},
                     {"phase1_swaps", r.p1},
                     {"phase2_swaps", r.p2},
                     {"reductions", r.reductions},
                     {"audit", r.audit},
                     {"pass", r.pass},
                     {"note", r.note}});
    std::cout << json{{"rows", arr}, {"graphs", rows.size()}, {"passed", passed}}.dump(2) << "\n";
  } else {
    std::cout << "index,source,n,length,bound,optimum,ratio,phase1_swaps,phase2_swaps,reductions,audit,pass,note\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::cout << i << "," << csv_field(r.source) << "," << r.n << "," << r.length << "," << r.bound << ","
                << (r.optimum >= 0 ? std::to_string(r.optimum) : "") << ","
                << (r.optimum > 0 ? fixed4(static_cast<double>(r.length) / r.optimum) : "") << "," << r.p1 << ","
                << r.p2 << "," << r.reductions << "," << r.audit << "," << (r.pass ? "pass" : "fail") << ","
                << csv_field(r.note) << "\n";
    }
    std::cerr << passed << "/" << rows.size() << " graphs passed\n";
  }
  return passed == static_cast<int>(rows.size()) ? 0 : 1;
}

int cmd_decompose(const std::string& input, const Common& c) {
  const Graph g = read_one(input, c.format);
  const auto d = decompose_uniform_third(g);
  json terms = json::array();
  for (const auto& [lambda, m] : d.terms) terms.push_back({{"lambda", lambda.str()}, {"matching", m.edges}});
  const auto problem = check_decomposition(g, d);
  std::cout << json{{"method", d.method}, {"terms", terms}, {"exact", !problem}, {"problem", problem.value_or("")}}
                   .dump(2)
            << "\n";
  return problem ? 1 : 0;
}

int cmd_oracle(const std::string& input, const Common& c) {
  const Graph g = read_one(input, c.format);
  json j{{"n", g.order()}};
  j["optimal_tsp"] = oracle::optimal_graphic_tsp(g);
  if (g.order() <= oracle::kEvenFactorLimit) j["min_even_factor_cost"] = oracle::min_cost_even_factor(g).second;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_dot(const std::string& input, const Common& c, bool with_tour) {
  const Graph g = read_one(input, c.format);
  DotStyle style;
  if (with_tour) {
    const auto r = run_pipeline(g, options_of(c));
    style.edge_uses.assign(g.size(), 0);
    for (std::size_t i = 0; i + 1 < r.tour.walk.size(); ++i) {
      // count parallel traversals on the lowest-id edge between the pair
      ++style.edge_uses[g.edge_between(r.tour.walk[i], r.tour.walk[i + 1])];
    }
  }
  std::cout << to_dot(g, style);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Short closed spanning walks in bridgeless cubic graphs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Input format: g6 or edges (default from file extension)");
    sub->add_option("--mode", common.mode, "2-factor selection: exhaustive, decomposition or auto");
    sub->add_flag("--trace", common.trace, "Log pipeline stages to stderr");
  };

  std::string input = "-";
  bool dump = false;
  auto* tour = app.add_subcommand("tour", "Build and certify a tour for one graph");
  tour->add_option("input", input, "Graph file, or - for stdin");
  tour->add_flag("--dump-reductions", dump, "Include the reduction records in the output");
  add_common(tour);

  std::vector<std::string> inputs, specs;
  int random_n = 0, random_count = 0, jobs = 0;
  std::uint64_t seed = 1;
  bool no_oracle = false, as_json = false;
  auto* corpus = app.add_subcommand("corpus", "Run the pipeline over many graphs and print a CSV summary");
  corpus->add_option("inputs", inputs, "Files or directories");
  corpus->add_option("--generate", specs, "Generator spec, e.g. petersen, prism:5, gp:7,2, flower:5");
  corpus->add_option("--random-n", random_n, "Order of random graphs");
  corpus->add_option("--random-count", random_count, "Number of random graphs");
  corpus->add_option("--seed", seed, "First random seed");
  corpus->add_option("--jobs", jobs, "Worker threads (0: OpenMP default)");
  corpus->add_flag("--no-oracle", no_oracle, "Skip the optimum column");
  corpus->add_flag("--json", as_json, "JSON instead of CSV");
  add_common(corpus);

  auto* analyze = app.add_subcommand("analyze", "Structural patterns of one graph");
  analyze->add_option("input", input, "Graph file, or - for stdin");
  add_common(analyze);
  auto* decompose = app.add_subcommand("decompose", "Perfect matchings averaging to 1/3 on every edge");
  decompose->add_option("input", input, "Graph file, or - for stdin");
  add_common(decompose);
  auto* orc = app.add_subcommand("oracle", "Exact optimum tour and cheapest even factor (small graphs)");
  orc->add_option("input", input, "Graph file, or - for stdin");
  add_common(orc);
  bool dot_tour = false;
  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("input", input, "Graph file, or - for stdin");
  dot->add_flag("--tour", dot_tour, "Label edges with tour traversal counts");
  add_common(dot);

  CLI11_PARSE(app, argc, argv);
  try {
    if (tour->parsed()) return cmd_tour(input, common, dump);
    if (corpus->parsed())
      return cmd_corpus(inputs, specs, random_n, random_count, seed, jobs, !no_oracle, common, as_json);
    if (analyze->parsed()) {
      std::cout << structure_json(read_one(input, common.format)).dump(2) << "\n";
      return 0;
    }
    if (decompose->parsed()) return cmd_decompose(input, common);
    if (orc->parsed()) return cmd_oracle(input, common);
    if (dot->parsed()) return cmd_dot(input, common, dot_tour);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 3;
  } catch (const CapabilityError& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
