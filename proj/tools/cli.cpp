#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "fourecc/cut_tree.hpp"
#include "fourecc/generators.hpp"
#include "fourecc/oracle.hpp"
#include "fourecc/reduction.hpp"
#include "json.hpp"

namespace fourecc::cli {

namespace {

using nlohmann::json;

CommandResult ok(std::string output) { return {kOk, std::move(output), {}}; }

CommandResult fail(int code, std::string message, std::string output = {}) {
  return {code, std::move(output), std::move(message)};
}

std::string components_text(const Labeling& l) {
  std::ostringstream out;
  for (const auto& cls : l.classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
    out << '\n';
  }
  return out.str();
}

// A 1- or 2-edge cut (ids of `g`) proving g is not 3-edge-connected, or
// nullopt. Cheap mode looks at degrees and hash coincidences and only
// reports witnesses that BFS confirms; exact mode runs the reduction.
struct Witness {
  std::string reason;
  std::vector<EdgeId> cut;
};

std::optional<Witness> small_cut(const Multigraph& input, std::uint64_t seed, bool exact) {
  const LoopFreeGraph lf = strip_self_loops(input);
  const Multigraph& g = lf.graph;
  auto original = [&](std::vector<EdgeId> cut) {
    for (EdgeId& e : cut) e = lf.id_map[e];
    std::sort(cut.begin(), cut.end());
    return cut;
  };
  if (g.vertex_count() < 2) return std::nullopt;
  if (connected_components(g).class_count != 1) return Witness{"graph is disconnected", {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 3) continue;
    std::vector<EdgeId> star;
    for (const Incidence& inc : g.neighbors(v)) star.push_back(inc.edge);
    return Witness{"vertex " + std::to_string(v) + " has degree " + std::to_string(star.size()),
                   original(star)};
  }
  const DfsStructure dfs = build_dfs(g, 0);
  const CompressedHashes hashes = assign_compressed_hashes(g, dfs, seed);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (dfs.is_tree(e) && hashes.ch[e] == 0) return Witness{"bridge", original({e})};
  }
  std::vector<KeyedEdge> keyed;
  for (EdgeId e = 0; e < g.edge_count(); ++e) keyed.push_back({hashes.ch[e], e});
  radix_sort(keyed);
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].key != keyed[i - 1].key) continue;
    const EdgeId pair[2] = {keyed[i - 1].edge, keyed[i].edge};
    if (oracle::disconnects(g, pair)) return Witness{"2-edge cut", original({pair[0], pair[1]})};
  }
  if (!exact) return std::nullopt;

  const TwoEccSplit split = two_ecc_split(g);
  if (!split.bridges.empty()) return Witness{"bridge", original({split.bridges[0]})};
  const Labeling three = three_ecc_components(g, seed, true);
  if (three.class_count == 1) return std::nullopt;
  const CactusOf2Cuts cactus = build_cactus(g, three);
  std::map<std::uint32_t, EdgeId> first;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto c = cactus.cycle_of_edge[e];
    if (c == kNoCycle) continue;
    const auto [it, fresh] = first.emplace(c, e);
    if (!fresh) return Witness{"2-edge cut", original({it->second, e})};
  }
  return std::nullopt;
}

CommandResult not_3ecc(const Witness& w) {
  json doc = {{"error", "not 3-edge-connected"}, {"reason", w.reason}, {"cut", w.cut}};
  std::string msg = "input is not 3-edge-connected: " + w.reason;
  if (!w.cut.empty()) {
    msg += " (edges";
    for (const EdgeId e : w.cut) msg += " " + std::to_string(e);
    msg += ")";
  }
  return fail(kPrecondition, msg, doc.dump() + "\n");
}

CommandResult cmd_components4(const RunConfig& cfg, const Multigraph& g) {
  const Labeling l = four_ecc(g, {cfg.mode, cfg.seed, cfg.paranoid});
  switch (cfg.format) {
    case Format::json:
      return ok(json{{"components", l.classes()}}.dump() + "\n");
    case Format::text:
      return ok(components_text(l));
    case Format::dot:
      break;
  }
  return fail(kInputError, "components4 supports --format json|text");
}

CommandResult cmd_cuts3(const RunConfig& cfg, const Multigraph& g) {
  if (auto w = small_cut(g, cfg.seed, cfg.paranoid)) return not_3ecc(*w);
  Enumeration en;
  try {
    en = enumerate_3cuts(g, {cfg.mode, cfg.seed, cfg.paranoid});
  } catch (const PreconditionError& e) {
    return not_3ecc({e.what(), {}});
  }
  if (cfg.format == Format::dot) return fail(kInputError, "cuts3 supports --format json|text");
  if (cfg.format == Format::text) {
    std::ostringstream out;
    for (const Cut3& c : en.cuts) out << c.edges[0] << ' ' << c.edges[1] << ' ' << c.edges[2] << '\n';
    return ok(out.str());
  }
  json list = json::array();
  for (const Cut3& c : en.cuts) list.push_back(c.edges);
  return ok(list.dump() + "\n");
}

CommandResult cmd_cut_tree(const RunConfig& cfg, const Multigraph& input) {
  if (auto w = small_cut(input, cfg.seed, cfg.paranoid)) return not_3ecc(*w);
  const LoopFreeGraph lf = strip_self_loops(input);
  CutSet cuts;
  CutTree tree;
  try {
    cuts = enumerate_3cuts(lf.graph, {cfg.mode, cfg.seed, cfg.paranoid}).cuts;
    const DfsStructure dfs = build_dfs(lf.graph, 0);
    tree = build_cut_tree(lf.graph, dfs, cuts);
  } catch (const PreconditionError& e) {
    return not_3ecc({e.what(), {}});
  }
  // Report cuts in the caller's EdgeIds.
  for (Cut3& c : cuts) c = Cut3::of(lf.id_map[c.edges[0]], lf.id_map[c.edges[1]], lf.id_map[c.edges[2]]);
  switch (cfg.format) {
    case Format::json:
      return ok(cut_tree_to_json(tree, cuts) + "\n");
    case Format::dot:
      return ok(cut_tree_to_dot(tree, cuts));
    case Format::text:
      break;
  }
  std::ostringstream out;
  for (std::uint32_t x = 0; x < tree.node_count(); ++x) {
    out << "node " << x;
    if (x != 0) {
      const auto& e = cuts[tree.node_cut[x]].edges;
      out << " parent " << tree.parent[x] << " cut " << e[0] << ' ' << e[1] << ' ' << e[2];
    }
    out << " vertices";
    for (VertexId v = 0; v < tree.psi.size(); ++v) {
      if (tree.psi[v] == x) out << ' ' << v;
    }
    out << '\n';
  }
  return ok(out.str());
}

CommandResult cmd_verify(const RunConfig& cfg, const Multigraph& g) {
  if (g.edge_count() > cfg.max_edges) {
    return fail(kInputError, "verify runs brute-force oracles; graph has " +
                                 std::to_string(g.edge_count()) + " edges, limit is " +
                                 std::to_string(cfg.max_edges) + " (--max-edges)");
  }
  const auto reports = oracle::verify_all(g, {cfg.mode, cfg.seed, cfg.paranoid});
  bool all_ok = true;
  json list = json::array();
  std::ostringstream text;
  for (const auto& r : reports) {
    all_ok &= r.ok();
    list.push_back({{"stage", r.stage},
                    {"expected_digest", r.expected_digest},
                    {"actual_digest", r.actual_digest},
                    {"mismatches", r.mismatches}});
    text << (r.ok() ? "ok   " : "FAIL ") << r.stage << ' ' << r.expected_digest << ' '
         << r.actual_digest << '\n';
    for (const auto& m : r.mismatches) text << "     " << m << '\n';
  }
  std::string output =
      cfg.format == Format::text ? text.str() : json{{"ok", all_ok}, {"reports", list}}.dump() + "\n";
  if (!all_ok) return fail(kMismatch, "oracle mismatch", std::move(output));
  return ok(std::move(output));
}

CommandResult cmd_gen(const RunConfig& cfg) {
  Multigraph g;
  try {
    g = generate(cfg.family, cfg.n, cfg.seed, cfg.degree);
  } catch (const std::invalid_argument& e) {
    return fail(kInputError, e.what());
  }
  return ok(cfg.format == Format::json ? graph_to_json(g) + "\n" : format_graph(g));
}

CommandResult cmd_bench(const RunConfig& cfg) {
  if (cfg.min_log > cfg.max_log || cfg.max_log > 26) {
    return fail(kInputError, "bench needs min-log <= max-log <= 26");
  }
  json rows = json::array();
  std::ostringstream text;
  text << "family n m seconds cuts components\n";
  for (unsigned k = cfg.min_log; k <= cfg.max_log; ++k) {
    Multigraph g;
    try {
      g = generate_sized(cfg.family, std::size_t{1} << k, cfg.seed);
    } catch (const std::invalid_argument& e) {
      return fail(kInputError, e.what());
    }
    const auto start = std::chrono::steady_clock::now();
    const ConnectivityLayers layers = connectivity_layers(g, {cfg.mode, cfg.seed, cfg.paranoid});
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back({{"family", cfg.family},
                    {"n", g.vertex_count()},
                    {"m", g.edge_count()},
                    {"seconds", seconds},
                    {"cuts", layers.cuts},
                    {"components", layers.four.class_count}});
    text << cfg.family << ' ' << g.vertex_count() << ' ' << g.edge_count() << ' ' << seconds << ' '
         << layers.cuts << ' ' << layers.four.class_count << '\n';
  }
  return ok(cfg.format == Format::text ? text.str() : rows.dump() + "\n");
}

}  // namespace

CommandResult run_command(const RunConfig& cfg, const std::string& input_text) {
  if (cfg.command == "gen") return cmd_gen(cfg);
  if (cfg.command == "bench") return cmd_bench(cfg);
  Multigraph g;
  try {
    g = parse_graph(input_text);
  } catch (const ParseError& e) {
    return fail(kInputError, std::string("parse error: ") + e.what());
  }
  if (cfg.command == "components4") return cmd_components4(cfg, g);
  if (cfg.command == "cuts3") return cmd_cuts3(cfg, g);
  if (cfg.command == "cut-tree") return cmd_cut_tree(cfg, g);
  if (cfg.command == "verify") return cmd_verify(cfg, g);
  return fail(kInputError, "unknown command '" + cfg.command + "'");
}

int main_with(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"4-edge-connected components and 3-edge cuts of multigraphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode = "deterministic";
  std::string format;  // empty: json, except gen which emits edge-list text

  auto common = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "cut enumeration: deterministic or randomized")
        ->check(CLI::IsMember({"deterministic", "randomized"}));
    sub->add_option("--seed", cfg.seed, "64-bit seed for hashing and generators");
    sub->add_flag("--paranoid", cfg.paranoid, "verify Monte Carlo steps exactly");
    sub->add_option("--format", format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--out", cfg.out, "write output to this file");
  };
  for (const char* name : {"components4", "cuts3", "cut-tree", "verify"}) {
    auto* sub = app.add_subcommand(name);
    common(sub);
    sub->add_option("input", cfg.input, "edge-list file, '-' for stdin");
    if (std::string(name) == "verify") sub->add_option("--max-edges", cfg.max_edges);
  }
  auto* gen = app.add_subcommand("gen", "generate a graph family");
  common(gen);
  gen->add_option("--family", cfg.family, "three_cycles, k4_chain or random_multi");
  gen->add_option("--n", cfg.n, "vertex count");
  gen->add_option("--degree", cfg.degree, "degree for random_multi");
  auto* bench = app.add_subcommand("bench", "time the pipeline on growing instances");
  common(bench);
  bench->add_option("--family", cfg.family);
  bench->add_option("--min-log", cfg.min_log, "smallest size as log2 of the edge count");
  bench->add_option("--max-log", cfg.max_log, "largest size as log2 of the edge count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.mode = mode == "randomized" ? CutMode::randomized : CutMode::deterministic;
  if (format.empty()) format = cfg.command == "gen" ? "text" : "json";
  cfg.format = format == "dot" ? Format::dot : format == "text" ? Format::text : Format::json;

  std::string text;
  if (cfg.command != "gen" && cfg.command != "bench") {
    std::ostringstream buf;
    if (cfg.input == "-") {
      buf << in.rdbuf();
    } else {
      std::ifstream file(cfg.input, std::ios::binary);
      if (!file) {
        err << "cannot open " << cfg.input << '\n';
        return kInputError;
      }
      buf << file.rdbuf();
    }
    text = buf.str();
  }

  const CommandResult result = run_command(cfg, text);
  if (!result.error.empty()) err << result.error << '\n';
  if (cfg.out.empty()) {
    out << result.output;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "cannot write " << cfg.out << '\n';
      return kInputError;
    }
    file << result.output;
  }
  return result.exit_code;
}

}  // namespace fourecc::cli
