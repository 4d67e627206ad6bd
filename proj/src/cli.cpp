#include "forcing/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "forcing/basis_forcing.hpp"
#include "forcing/errors.hpp"
#include "forcing/io.hpp"
#include "forcing/matroid.hpp"
#include "forcing/oracle.hpp"
#include "forcing/sp_antiforcing.hpp"
#include "forcing/sp_dag.hpp"
#include "forcing/sp_forcing.hpp"
#include "forcing/vc_reduction.hpp"

namespace forcing::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw InputError("cannot write file '" + path + "'");
}

std::string digest(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ULL;  // FNV-1a
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

std::vector<int> parse_id_list(const std::string& text, const char* flag) {
  std::vector<int> ids;
  if (text.empty()) return ids;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      int id = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ids.push_back(id);
    } catch (const std::exception&) {
      throw InputError(std::string("invalid id '") + item + "' in " + flag);
    }
  }
  return ids;
}

std::vector<int> sorted(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct Options {
  std::string file;
  std::string path;
  std::string basis;
  std::string set;
  std::string weights;
  std::string out_prefix = "gadget";
  std::string kind;
  bool exact = false;
  bool simple = false;
  bool json_only = false;
  std::optional<int> budget;
  std::int64_t path_limit = 10'000;
  int k = 0;
  std::uint64_t seed = 0;
};

json path_result(const ForcingResult& r) {
  return {{"size", r.size()},
          {"set", r.set},
          {"witness", sorted(r.witness)},
          {"witness_path", r.witness}};
}

json basis_result(const BasisForcingResult& r) {
  json trace = json::array();
  for (const auto& c : r.trace) {
    trace.push_back({{"weight", c.weight},
                     {"elements", c.elements},
                     {"basis_part", c.basis_part},
                     {"loops", c.loops},
                     {"added", c.added}});
  }
  return {{"size", r.size()}, {"set", r.set}, {"witness", r.basis}, {"trace", trace}};
}

// Input graph for path problems: digraph or undirected graph with terminals.
SpDag load_sp_dag(const std::string& text) {
  auto problem = parse_graph(text);
  return std::visit([](const auto& g) { return build_sp_dag(g); }, problem);
}

WeightedMultigraph load_multigraph(const std::string& text) {
  auto problem = parse_graph(text);
  if (!std::holds_alternative<WeightedMultigraph>(problem)) {
    throw InputError("spanning-tree problems need an undirected 'p graph' file");
  }
  return std::get<WeightedMultigraph>(std::move(problem));
}

WeightedMultigraph with_weights(const WeightedMultigraph& graph,
                                const std::map<int, Weight>& weights) {
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  for (auto [id, w] : weights) {
    if (id > graph.edge_count()) throw InputError("weight given for unknown edge");
    edges[id - 1].weight = w;
  }
  return WeightedMultigraph(graph.vertex_count(), std::move(edges), graph.terminals());
}

struct LoadedMatroid {
  MatroidPtr matroid;
  ElementWeights weights;
};

// A 'p graph' file gives its graphic matroid with the edge weights; a
// 'p matroid' file gives an explicit matroid with weight 0 unless --weights.
LoadedMatroid load_matroid(const std::string& text, const std::string& weights_file) {
  LoadedMatroid loaded;
  bool explicit_file = false;
  {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream tokens(line);
      std::string p, kind;
      if (!(tokens >> p)) continue;
      tokens >> kind;
      explicit_file = p == "p" && kind == "matroid";
      break;
    }
  }
  if (explicit_file) {
    auto file = parse_matroid(text);
    loaded.matroid = explicit_matroid(file.ground_size, file.bases);
    loaded.weights.assign(file.ground_size + 1, 0);
  } else {
    auto graph = load_multigraph(text);
    loaded.matroid = graphic_matroid(graph);
    loaded.weights.assign(graph.edge_count() + 1, 0);
    for (EdgeId id = 1; id <= graph.edge_count(); ++id) loaded.weights[id] = graph.edge(id).weight;
  }
  if (!weights_file.empty()) {
    for (auto [id, w] : parse_weights(read_file(weights_file))) {
      if (id >= static_cast<int>(loaded.weights.size())) {
        throw InputError("weight given for unknown element " + std::to_string(id));
      }
      loaded.weights[id] = w;
    }
  }
  return loaded;
}

json run_sp_dag(const std::string& text) {
  auto dag = load_sp_dag(text);
  json dist = json::object();
  for (VertexId v : dag.topological_order()) dist[std::to_string(v)] = dag.distances()[v];
  std::vector<int> edges(dag.edge_ids().begin(), dag.edge_ids().end());
  std::vector<int> order(dag.topological_order().begin(), dag.topological_order().end());
  return {{"source", dag.source()},
          {"target", dag.target()},
          {"edges", edges},
          {"topological_order", order},
          {"distances", dist},
          {"path_count_capped", count_paths_capped(dag, dag.source(), dag.target(), 1'000'000)}};
}

json run_sp_force(const Options& o, const std::string& text) {
  auto dag = load_sp_dag(text);
  if (!o.path.empty()) return path_result(min_forcing_set_for_path(dag, parse_id_list(o.path, "--path")));
  return path_result(min_forcing_set(dag));
}

json run_sp_antiforce(const Options& o, const std::string& text) {
  auto dag = load_sp_dag(text);
  if (!o.path.empty()) {
    if (o.exact) throw InputError("--path and --exact are mutually exclusive");
    return path_result(min_antiforcing_set_for_path(dag, parse_id_list(o.path, "--path")));
  }
  if (!o.exact) throw InputError("sp-antiforce needs --path <ids> or --exact");
  ExactAntiforcingOptions options;
  options.budget = o.budget;
  options.path_limit = o.path_limit;
  auto result = min_antiforcing_set_exact(dag, options);
  if (!result) return {{"exceeds_budget", true}, {"budget", *o.budget}};
  return path_result(*result);
}

json run_basis(const Options& o, const std::string& text, bool forcing, bool graph_native,
               std::int64_t& oracle_calls) {
  auto loaded = load_matroid(text, o.weights);
  if (!o.basis.empty()) {
    auto basis = parse_id_list(o.basis, "--basis");
    auto r = forcing ? forcing_for_basis(loaded.matroid, loaded.weights, basis)
                     : antiforcing_for_basis(loaded.matroid, loaded.weights, basis);
    oracle_calls = loaded.matroid->oracle_calls();
    return basis_result(r);
  }
  if (graph_native) {
    auto graph = load_multigraph(text);
    if (!o.weights.empty()) graph = with_weights(graph, parse_weights(read_file(o.weights)));
    return basis_result(forcing ? mst_forcing(graph) : mst_antiforcing(graph));
  }
  auto r = forcing ? min_forcing_min_bases(loaded.matroid, loaded.weights)
                   : min_antiforcing_min_bases(loaded.matroid, loaded.weights);
  oracle_calls = loaded.matroid->oracle_calls();
  return basis_result(r);
}

json roles_json(const VcReductionInstance& instance) {
  json vertices = json::array();
  for (VertexId v = 1; v <= instance.graph.vertex_count(); ++v) {
    vertices.push_back({{"id", v}, {"name", instance.vertex_name(v)}});
  }
  json edges = json::array();
  for (EdgeId id = 1; id <= instance.graph.edge_count(); ++id) {
    edges.push_back({{"id", id},
                     {"role", instance.edge_name(id)},
                     {"weight", instance.graph.edge(id).weight}});
  }
  return {{"n", instance.n},
          {"k", instance.k},
          {"N", instance.big_n},
          {"shortest_path_length", instance.shortest_path_length},
          {"s", instance.source()},
          {"t", instance.target()},
          {"vertices", vertices},
          {"edges", edges},
          {"thick_groups", instance.thick_groups}};
}

json run_reduce_vc(const Options& o, const std::string& text) {
  auto graph = load_multigraph(text);
  auto instance = vc_to_antiforcing_instance(graph, o.k);
  json roles = roles_json(instance);
  json summary = {{"n", instance.n},
                  {"k", instance.k},
                  {"N", instance.big_n},
                  {"thick_multiplicity", instance.big_n + 2},
                  {"shortest_path_length", instance.shortest_path_length},
                  {"simple", o.simple}};
  std::string graph_text;
  if (o.simple) {
    auto simple = make_simple_unweighted(instance);
    json simple_edges = json::array();
    for (std::size_t i = 0; i < simple.origin.size(); ++i) {
      simple_edges.push_back({{"id", i + 1},
                              {"origin", simple.origin[i]},
                              {"role", instance.edge_name(simple.origin[i])}});
    }
    roles["simple_edges"] = simple_edges;
    roles["simple_shortest_path_length"] = 2 * instance.shortest_path_length;
    summary["simple_shortest_path_length"] = 2 * instance.shortest_path_length;
    summary["vertex_count"] = simple.graph.vertex_count();
    summary["edge_count"] = simple.graph.edge_count();
    graph_text = format_graph(simple.graph);
  } else {
    summary["vertex_count"] = instance.graph.vertex_count();
    summary["edge_count"] = instance.graph.edge_count();
    graph_text = format_graph(instance.graph);
  }
  const std::string graph_file = o.out_prefix + ".gr";
  const std::string roles_file = o.out_prefix + ".roles.json";
  write_file(graph_file, graph_text);
  write_file(roles_file, roles.dump(2) + "\n");
  summary["graph_file"] = graph_file;
  summary["roles_file"] = roles_file;
  return summary;
}

json verify_family(const SolutionFamily& family, const std::vector<int>& set, bool forcing,
                   std::optional<std::size_t> index) {
  json report;
  bool valid;
  BruteResult minimum;
  if (index) {
    const auto& x = family[*index];
    bool inside = std::all_of(set.begin(), set.end(), [&](int e) {
      return std::find(x.begin(), x.end(), e) != x.end();
    });
    bool unique = forcing ? is_forcing_for_family(family, set) && inside
                          : is_antiforcing_for_family(family, set) &&
                                std::none_of(set.begin(), set.end(), [&](int e) {
                                  return std::find(x.begin(), x.end(), e) != x.end();
                                });
    valid = unique;
    minimum = forcing ? brute_min_forcing_for(family, *index)
                      : brute_min_antiforcing_for(family, *index);
  } else {
    valid = forcing ? is_forcing_for_family(family, set) : is_antiforcing_for_family(family, set);
    minimum = forcing ? brute_min_forcing(family) : brute_min_antiforcing(family);
  }
  report["valid"] = valid;
  report["claimed_size"] = set.size();
  report["minimum"] = minimum.size;
  report["minimum_set"] = minimum.set;
  report["is_minimum"] = valid && static_cast<int>(set.size()) == minimum.size;
  report["solutions"] = family.size();
  return report;
}

json run_verify(const Options& o, const std::string& text) {
  auto set = sorted(parse_id_list(o.set, "--set"));
  set.erase(std::unique(set.begin(), set.end()), set.end());
  const bool forcing = o.kind.ends_with("-force") && !o.kind.ends_with("antiforce");
  if (o.kind == "sp-force" || o.kind == "sp-antiforce") {
    auto dag = load_sp_dag(text);
    auto paths = enumerate_st_paths(dag);
    SolutionFamily family;
    for (auto p : paths) family.push_back(sorted(std::move(p)));
    std::optional<std::size_t> index;
    if (!o.path.empty()) {
      auto p = parse_id_list(o.path, "--path");
      auto it = std::find(paths.begin(), paths.end(), p);
      if (it == paths.end()) throw InputError("--path is not a shortest s-t path");
      index = static_cast<std::size_t>(it - paths.begin());
    }
    return verify_family(family, set, forcing, index);
  }
  if (o.kind == "mst-force" || o.kind == "mst-antiforce" || o.kind == "matroid-force" ||
      o.kind == "matroid-antiforce") {
    auto loaded = load_matroid(text, o.weights);
    auto family = min_weight_bases(enumerate_bases(*loaded.matroid), loaded.weights);
    std::optional<std::size_t> index;
    if (!o.basis.empty()) {
      auto b = sorted(parse_id_list(o.basis, "--basis"));
      auto it = std::find(family.begin(), family.end(), b);
      if (it == family.end()) throw InputError("--basis is not a minimum-weight basis");
      index = static_cast<std::size_t>(it - family.begin());
    }
    return verify_family(family, set, forcing, index);
  }
  throw InputError("unknown verify kind '" + o.kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum forcing and anti-forcing sets for shortest paths and matroid bases",
               "forcing"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json-only", o.json_only, "Print only the result payload");
  app.add_option("--seed", o.seed, "Seed for randomized helpers")->capture_default_str();

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "Problem file")->required(); };

  auto* sp_dag = app.add_subcommand("sp-dag", "Shortest-path DAG of a path problem");
  add_file(sp_dag);
  auto* sp_force = app.add_subcommand("sp-force", "Minimum forcing set for shortest s-t paths");
  add_file(sp_force);
  sp_force->add_option("--path", o.path, "Comma-separated edge ids of a shortest path");
  auto* sp_anti = app.add_subcommand("sp-antiforce", "Minimum anti-forcing set for shortest paths");
  add_file(sp_anti);
  sp_anti->add_option("--path", o.path, "Comma-separated edge ids of a shortest path");
  sp_anti->add_flag("--exact", o.exact, "Exact search over all shortest paths");
  sp_anti->add_option("--budget", o.budget, "Stop unless a set of at most this size exists");
  sp_anti->add_option("--path-limit", o.path_limit, "Witness enumeration threshold")
      ->capture_default_str();

  std::vector<CLI::App*> basis_commands;
  const std::pair<const char*, const char*> basis_specs[] = {
      {"mst-force", "Minimum forcing set for minimum spanning trees"},
      {"mst-antiforce", "Minimum anti-forcing set for minimum spanning trees"},
      {"matroid-force", "Minimum forcing set for minimum-weight matroid bases"},
      {"matroid-antiforce", "Minimum anti-forcing set for minimum-weight matroid bases"},
  };
  for (auto [name, description] : basis_specs) {
    auto* sub = app.add_subcommand(name, description);
    add_file(sub);
    sub->add_option("--basis", o.basis, "Comma-separated ids of a minimum-weight basis");
    sub->add_option("--weights", o.weights, "Weight file ('w <id> <weight>' lines)");
    basis_commands.push_back(sub);
  }

  auto* reduce = app.add_subcommand("reduce-vc", "Vertex-cover to anti-forcing gadget graph");
  add_file(reduce);
  reduce->add_option("k", o.k, "Vertex-cover budget")->required();
  reduce->add_flag("--simple", o.simple, "Emit the simple unit-weight version");
  reduce->add_option("--out", o.out_prefix, "Output prefix for .gr and .roles.json")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a claimed set against brute force");
  verify->add_option("kind", o.kind, "sp-force | sp-antiforce | mst-force | ...")->required();
  add_file(verify);
  verify->add_option("--set", o.set, "Comma-separated ids of the claimed set");
  verify->add_option("--path", o.path, "Restrict to this witness path");
  verify->add_option("--basis", o.basis, "Restrict to this witness basis");
  verify->add_option("--weights", o.weights, "Weight file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    const std::string text = read_file(o.file);
    std::int64_t oracle_calls = -1;
    json result;
    if (command == "sp-dag") {
      result = run_sp_dag(text);
    } else if (command == "sp-force") {
      result = run_sp_force(o, text);
    } else if (command == "sp-antiforce") {
      result = run_sp_antiforce(o, text);
    } else if (command == "mst-force" || command == "mst-antiforce") {
      result = run_basis(o, text, command == "mst-force", true, oracle_calls);
    } else if (command == "matroid-force" || command == "matroid-antiforce") {
      result = run_basis(o, text, command == "matroid-force", false, oracle_calls);
    } else if (command == "reduce-vc") {
      result = run_reduce_vc(o, text);
    } else {
      result = run_verify(o, text);
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    if (o.json_only) {
      out << result.dump() << '\n';
      return kExitOk;
    }
    json report = result;
    report["command"] = command == "verify" ? "verify " + o.kind : command;
    report["input"] = o.file;
    report["input_digest"] = digest(text);
    report["seed"] = o.seed;
    report["time_ms"] = elapsed.count();
    if (oracle_calls >= 0) report["oracle_calls"] = oracle_calls;
    out << report.dump() << '\n';
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace forcing::cli
