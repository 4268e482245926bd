#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "aecc/colorer.hpp"
#include "aecc/configurations.hpp"
#include "aecc/corpus.hpp"
#include "aecc/discharge.hpp"
#include "aecc/io.hpp"
#include "aecc/oracle.hpp"

namespace fs = std::filesystem;
using namespace aecc;

namespace {

enum Exit { kOk = 0, kViolation = 1, kParse = 2, kNotPlanar = 3, kContradiction = 4, kBudget = 5 };

int log_level() {
  const char* v = std::getenv("AECC_LOG");
  if (!v) return 0;
  std::string s(v);
  if (s == "debug" || s == "2") return 2;
  if (s == "info" || s == "1") return 1;
  return 0;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_edge_list(in);
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

struct Budget {
  long nodes = 0;
  double seconds = 0;

  ColorerBudget colorer() const {
    ColorerBudget b;
    if (nodes > 0) b.exhaustive.max_nodes = nodes;
    if (seconds > 0) b.exhaustive.max_seconds = seconds;
    return b;
  }
  OracleBudget oracle() const {
    OracleBudget b;
    if (nodes > 0) b.max_nodes = nodes;
    if (seconds > 0) b.max_seconds = seconds;
    return b;
  }
};

struct ColorJob {
  std::string input;
  std::string coloring_out;
  std::string trace_out;
  std::string reproducer;
  int code = kOk;
  std::string message;
};

void color_one(ColorJob& job, int palette, const Budget& budget) {
  Graph g;
  try {
    g = load_graph(job.input);
  } catch (const ParseError& e) {
    job.code = kParse;
    job.message = job.input + ": " + e.what();
    return;
  }
  ColorOptions opt;
  opt.palette = palette;
  opt.budget = budget.colorer();
  try {
    if (!is_two_connected(g) && log_level() > 0) {
      std::cerr << job.input << ": not 2-connected, coloring block by block\n";
    }
    ColoringRun run = color_planar(g, opt);
    int bound = palette > 0 ? palette : (g.edge_count() ? max_degree(g) + 5 : 5);
    int top = 0;
    for (Color c : run.coloring.colors()) top = std::max(top, c);
    if (!run.coloring.is_total() || check_acyclic(g, run.coloring) || top > bound) {
      job.code = kContradiction;
      job.message = job.input + ": produced coloring failed verification";
      return;
    }
    std::ostringstream col;
    write_coloring(col, g, run.coloring);
    write_text(job.coloring_out, col.str());
    if (!job.trace_out.empty()) {
      json trace = {{"palette", run.palette},
                    {"blocks", run.block_count},
                    {"colors_used", run.coloring.colors_used()},
                    {"steps", to_json(run.trace)}};
      write_text(job.trace_out, trace.dump(2) + "\n");
    }
    if (log_level() > 1) {
      for (const auto& s : run.trace) {
        std::cerr << "block " << s.block << " " << s.tag << " " << to_string(s.kind) << " " << s.rung << " "
                  << s.nodes << "\n";
      }
    }
    job.message = job.input + ": ok, " + std::to_string(run.coloring.colors_used()) + " colors (palette " +
                  std::to_string(run.palette) + ")";
  } catch (const NotPlanar&) {
    job.code = kNotPlanar;
    job.message = job.input + ": not planar";
  } catch (const BudgetExceeded& e) {
    job.code = kBudget;
    job.message = job.input + ": " + e.what();
  } catch (const ExtensionFailed& e) {
    job.code = e.contradiction ? kContradiction : kBudget;
    std::ostringstream dump;
    dump << "# " << e.what() << "\n# palette " << e.partial.palette_size() << "\n# graph\n";
    write_edge_list(dump, e.parent);
    dump << "# partial coloring\n";
    write_coloring(dump, e.parent, e.partial);
    write_text(job.reproducer, dump.str());
    job.message = job.input + ": " + e.what() + " (reproducer: " + job.reproducer + ")";
  }
}

int cmd_color(const std::vector<std::string>& inputs, const std::string& out, const std::string& trace,
              int palette, const Budget& budget, int jobs) {
  std::vector<ColorJob> work;
  if (inputs.size() == 1) {
    work.push_back({inputs[0], out, trace, fs::path(inputs[0]).filename().string() + ".reproducer.txt"});
  } else {
    if (out.empty()) {
      std::cerr << "color: -o DIR is required with several inputs\n";
      return kParse;
    }
    fs::create_directories(out);
    for (const auto& in : inputs) {
      std::string stem = fs::path(in).stem().string();
      work.push_back({in, (fs::path(out) / (stem + ".coloring")).string(),
                      trace.empty() ? "" : (fs::path(out) / (stem + ".trace.json")).string(),
                      (fs::path(out) / (stem + ".reproducer.txt")).string()});
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) color_one(work[i], palette, budget);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  int code = kOk;
  for (const auto& j : work) {
    if (j.code != kOk || inputs.size() > 1 || log_level() > 0) std::cerr << j.message << "\n";
    code = std::max(code, j.code);
  }
  return code;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, const std::string& json_out) {
  Graph g;
  EdgeColoring c;
  try {
    g = load_graph(graph_path);
    std::ifstream in(coloring_path);
    if (!in) throw ParseError(0, "cannot open " + coloring_path);
    c = read_coloring(in, g);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  if (!c.is_total()) {
    json j = {{"status", "Partial"}};
    write_text(json_out, j.dump(2) + "\n");
    return kParse;
  }
  auto v = check_acyclic(g, c);
  json j = v ? json{{"status", "Violation"}, {"violation", to_json(*v)}} : json{{"status", "Ok"}};
  write_text(json_out, j.dump(2) + "\n");
  return v ? kViolation : kOk;
}

int cmd_oracle(const std::string& graph_path, int k, const Budget& budget, const std::string& out) {
  Graph g;
  try {
    g = load_graph(graph_path);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  if (k > 0) {
    auto r = exists_acyclic_coloring(g, k, budget.oracle());
    if (r.decision == Decision::BudgetExceeded) {
      std::cout << "BudgetExceeded\n";
      return kBudget;
    }
    std::cout << (r.decision == Decision::Yes ? "Yes" : "No") << "\n";
    if (r.coloring && !out.empty()) {
      std::ostringstream s;
      write_coloring(s, g, *r.coloring);
      write_text(out, s.str());
    }
    return kOk;
  }
  auto r = acyclic_chromatic_index(g, budget.oracle());
  if (!r.index) {
    std::cout << "BudgetExceeded\n";
    return kBudget;
  }
  std::cout << *r.index << "\n";
  if (r.coloring && !out.empty()) {
    std::ostringstream s;
    write_coloring(s, g, *r.coloring);
    write_text(out, s.str());
  }
  return kOk;
}

int cmd_find_config(const std::string& graph_path, const std::string& tag, bool grouped, const std::string& out) {
  Graph g;
  try {
    g = load_graph(graph_path);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  DetectOptions opt;
  opt.a32_grouped = grouped;
  std::optional<Configuration> cfg;
  if (tag.empty()) {
    cfg = find_any_configuration(g, opt);
  } else {
    auto t = parse_tag(tag);
    if (!t) {
      std::cerr << "unknown configuration '" << tag << "'\n";
      return kParse;
    }
    cfg = detect(g, *t, opt);
  }
  write_text(out, cfg ? to_json(*cfg).dump(2) + "\n" : std::string("none\n"));
  return kOk;
}

int cmd_discharge(const std::string& graph_path, const std::string& rotation_path, int component,
                  const std::string& out) {
  Graph g;
  std::vector<std::vector<Vertex>> rotation;
  try {
    g = load_graph(graph_path);
    if (!rotation_path.empty()) {
      std::ifstream in(rotation_path);
      if (!in) throw ParseError(0, "cannot open " + rotation_path);
      rotation = read_rotation(in, g.vertex_count());
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  if (!is_planar(g)) {
    std::cerr << "not planar\n";
    return kNotPlanar;
  }
  try {
    StrippedGraph sh = build_H(g, component);
    std::optional<PlaneEmbedding> emb;
    if (rotation.empty()) {
      emb = embed(sh.h);
    } else {
      PlaneEmbedding full(g, rotation);
      Reindexed r;
      r.old_to_new = sh.g_to_h;
      r.new_to_old = sh.h_to_g;
      emb.emplace(sh.h, restrict_rotation(full.rotation(), r));
    }
    ChargeLedger initial = initial_charges(*emb);
    DischargeResult result = apply_rules(*emb, initial);
    auto lemmas = check_structural_lemmas(g, sh, *emb);
    write_text(out, discharge_report(sh, *emb, initial, result, lemmas).dump(2) + "\n");
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  return kOk;
}

int cmd_gen(int stacked, const std::string& name, double p, std::uint64_t seed, const std::string& corpus_dir,
            const std::string& out, const std::string& rotation_out) {
  if (!corpus_dir.empty()) {
    fs::create_directories(corpus_dir);
    json manifest = json::array();
    for (const auto& entry : standard_corpus(seed)) {
      std::ostringstream s;
      write_edge_list(s, entry.graph);
      write_text((fs::path(corpus_dir) / (entry.name + ".edges")).string(), s.str());
      manifest.push_back({{"name", entry.name},
                          {"n", entry.graph.vertex_count()},
                          {"m", entry.graph.edge_count()},
                          {"delta", max_degree(entry.graph)},
                          {"seed", entry.seed}});
    }
    write_text((fs::path(corpus_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
    return kOk;
  }
  Graph g;
  std::vector<std::vector<Vertex>> rotation;
  try {
    if (stacked > 0) {
      auto eg = stacked_triangulation(stacked, seed);
      g = eg.graph;
      rotation = eg.rotation;
    } else if (!name.empty()) {
      g = named(name);
    } else {
      std::cerr << "gen: one of --stacked, --named, --corpus is required\n";
      return kParse;
    }
  } catch (const GraphError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  if (p > 0) {
    g = thin(g, p, seed);
    rotation.clear();
  }
  std::ostringstream s;
  write_edge_list(s, g);
  write_text(out, s.str());
  if (!rotation_out.empty()) {
    if (rotation.empty()) {
      std::cerr << "gen: rotation only available for unthinned stacked triangulations\n";
      return kParse;
    }
    std::ostringstream r;
    write_rotation(r, rotation);
    write_text(rotation_out, r.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acyclic edge coloring toolkit for planar graphs"};
  app.require_subcommand(1);

  int palette = 0;
  Budget budget;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string json_out;
  std::string out;

  auto* color = app.add_subcommand("color", "Color edge-list files with at most Delta + 5 colors");
  std::vector<std::string> inputs;
  color->add_option("inputs", inputs, "edge-list files")->required();
  color->add_option("-o,--out", out, "coloring output (directory with several inputs)");
  color->add_option("--json", json_out, "trace output");
  color->add_option("--palette-size", palette, "override the Delta + 5 palette");
  color->add_option("--budget-nodes", budget.nodes, "exhaustive search node cap");
  color->add_option("--budget-seconds", budget.seconds, "exhaustive search time cap");
  color->add_option("--jobs", jobs, "parallel workers across input files");
  color->add_option("--seed", seed, "unused; the colorer is deterministic");

  auto* verify = app.add_subcommand("verify", "Check a coloring for properness and acyclicity");
  std::string graph_path, coloring_path;
  verify->add_option("graph", graph_path)->required();
  verify->add_option("coloring", coloring_path)->required();
  verify->add_option("--json", json_out, "report output");

  auto* oracle = app.add_subcommand("oracle", "Exact acyclic chromatic index by backtracking");
  int k = 0;
  oracle->add_option("graph", graph_path)->required();
  oracle->add_option("--k", k, "decide a single palette size");
  oracle->add_option("--budget-nodes", budget.nodes);
  oracle->add_option("--budget-seconds", budget.seconds);
  oracle->add_option("-o,--out", out, "witness coloring output");

  auto* find = app.add_subcommand("find-config", "Find a reducible configuration");
  std::string tag;
  bool grouped = false;
  find->add_option("graph", graph_path)->required();
  find->add_option("--tag", tag, "only this configuration, e.g. A2.1");
  find->add_flag("--a32-grouped", grouped, "read A3.2 as X and (P or Q)");
  find->add_option("--json", json_out, "output path");

  auto* discharge = app.add_subcommand("discharge", "Run the discharging rules on H");
  std::string rotation_path;
  int component = 0;
  discharge->add_option("graph", graph_path)->required();
  discharge->add_option("--rotation", rotation_path, "rotation system of the input graph");
  discharge->add_option("--component", component, "component of H");
  discharge->add_option("--json", json_out, "report output");

  auto* gen = app.add_subcommand("gen", "Generate planar test graphs");
  int stacked = 0;
  std::string name, corpus_dir, rotation_out;
  double p = 0;
  gen->add_option("--stacked", stacked, "stacked triangulation on N vertices");
  gen->add_option("--named", name, "K4, C5, W8, cube, icosahedron, grid3x4, ...");
  gen->add_option("--thin", p, "subdivide each edge with this probability");
  gen->add_option("--seed", seed);
  gen->add_option("--corpus", corpus_dir, "write the standard corpus and manifest.json here");
  gen->add_option("-o,--out", out, "edge-list output");
  gen->add_option("--rotation-out", rotation_out, "rotation system output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*color) return cmd_color(inputs, out, json_out, palette, budget, jobs);
    if (*verify) return cmd_verify(graph_path, coloring_path, json_out);
    if (*oracle) return cmd_oracle(graph_path, k, budget, out);
    if (*find) return cmd_find_config(graph_path, tag, grouped, json_out);
    if (*discharge) return cmd_discharge(graph_path, rotation_path, component, json_out);
    if (*gen) return cmd_gen(stacked, name, p, seed, corpus_dir, out, rotation_out);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
