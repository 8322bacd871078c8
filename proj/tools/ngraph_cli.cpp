#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngraph/dot.hpp"
#include "ngraph/empires.hpp"
#include "ngraph/errors.hpp"
#include "ngraph/generate.hpp"
#include "ngraph/json_io.hpp"
#include "ngraph/sequentialize.hpp"
#include "ngraph/split.hpp"
#include "ngraph/switching.hpp"

using namespace ngraph;

namespace {

// 0 = positive verdict / success, 1 = negative verdict (unsound graph,
// failed derivation), 2 = no verdict (bad input, resource limit, misuse).
constexpr int kOk = 0, kRejected = 1, kNoVerdict = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

ResourceLimit limit_from(int flag_value) {
  if (flag_value > 0) return ResourceLimit{flag_value};
  if (const char* env = std::getenv("NGRAPH_MAX_SWITCHABLES")) {
    int v = std::atoi(env);
    if (v > 0) return ResourceLimit{v};
  }
  return ResourceLimit{};
}

uint64_t witness_mask(const ProofGraph& g, const MetaSwitching& s) {
  auto switchable = switchable_links(g);
  uint64_t mask = 0;
  for (size_t j = 0; j < switchable.size(); ++j)
    if (s.choice_for(switchable[j]) == SwitchChoice::Right) mask |= uint64_t(1) << j;
  return mask;
}

int run_check(const std::string& file, int max_switchables, const std::string& witness_dot) {
  ProofGraph g = graph_from_json(slurp(file));
  Verdict v = is_ngraph(g, limit_from(max_switchables));
  if (v.sound) {
    std::cout << "sound: " << g.node_count() << " nodes, " << g.link_count() << " links, "
              << switchable_links(g).size() << " switchable\n";
    return kOk;
  }
  std::cout << "unsound (" << (v.defect == Defect::Cyclic ? "cyclic" : "disconnected")
            << "): witness switching mask " << witness_mask(g, *v.witness) << "\n";
  if (!witness_dot.empty()) spill(witness_dot, switching_to_dot(g, *v.witness));
  return kRejected;
}

int run_empire(const std::string& file, const std::string& node, const std::string& side_name,
               bool oracle, int max_switchables, const std::string& dot_path) {
  ProofGraph g = graph_from_json(slurp(file));
  Side side;
  if (side_name == "north")
    side = Side::North;
  else if (side_name == "south")
    side = Side::South;
  else if (side_name == "whole")
    side = Side::Whole;
  else
    throw DomainError("--side must be north, south, or whole");

  int a = g.node_index(node);
  NodeSet members(g.node_count());
  if (oracle) {
    ResourceLimit limit = limit_from(max_switchables);
    if (side == Side::Whole)
      members = empire_by_intersection(g, a, Side::North, limit) |
                empire_by_intersection(g, a, Side::South, limit);
    else
      members = empire_by_intersection(g, a, side, limit);
  } else {
    members = empire_closure_set(g, a, side);
  }
  Empire e{node, side, members};

  auto ids = e.member_ids(g);
  std::sort(ids.begin(), ids.end());
  std::cout << to_string(side) << "(" << node << "): " << ids.size() << " nodes\n";
  for (const auto& id : ids)
    std::cout << id << "\t" << g.label(g.node_index(id)).to_string() << "\n";
  if (!dot_path.empty()) spill(dot_path, empire_to_dot(g, e));
  return kOk;
}

int run_split(const std::string& file, int max_switchables, const std::string& dot_path) {
  ProofGraph g = graph_from_json(slurp(file));
  SplitResult r = find_split(g, limit_from(max_switchables));
  auto print_side = [&](const char* name, const Empire& e) {
    auto ids = e.member_ids(g);
    std::sort(ids.begin(), ids.end());
    std::cout << name << ":";
    for (const auto& id : ids) std::cout << " " << id;
    std::cout << "\n";
  };
  std::cout << "split node: " << r.node << " ("
            << g.label(g.node_index(r.node)).to_string() << ")\n";
  print_side("north", r.north);
  print_side("south", r.south);
  if (!dot_path.empty()) spill(dot_path, split_to_dot(g, r));
  return kOk;
}

int run_sequentialize(const std::string& file, bool encode_units, const std::string& witness,
                      const std::string& format, const std::string& out,
                      int max_switchables) {
  ProofGraph g = graph_from_json(slurp(file));
  SequentializeOptions options;
  options.limit = limit_from(max_switchables);
  options.encode_units = encode_units;
  if (!witness.empty()) options.unit_witness = witness;
  LKDerivation d = sequentialize(g, options);

  LkVerdict check = lk_check(d);
  if (!check.sound) {
    std::cerr << "internal error: emitted derivation fails its own check: " << check.error
              << "\n";
    return kNoVerdict;
  }
  if (format == "json")
    spill(out, derivation_to_json(d));
  else if (format == "dot")
    spill(out, derivation_to_dot(d));
  else
    spill(out, to_text(d));
  return kOk;
}

int run_verify_lk(const std::string& file) {
  LKDerivation d = derivation_from_json(slurp(file));
  LkVerdict v = lk_check(d);
  if (v.sound) {
    std::cout << "ok: " << d.conclusion.to_string() << "\n";
    return kOk;
  }
  std::cout << "rejected: " << v.error << " (at premise path";
  for (int i : v.path) std::cout << " " << i;
  std::cout << ")\n";
  return kRejected;
}

int run_gen(bool unsound, uint64_t seed, int count, int max_links, const std::string& atoms,
            double mutation_rate, const std::string& out_dir) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.max_links = max_links;
  spec.mutation_rate = mutation_rate;
  if (!atoms.empty()) {
    spec.atom_pool.clear();
    std::istringstream in(atoms);
    std::string atom;
    while (std::getline(in, atom, ','))
      if (!atom.empty()) spec.atom_pool.push_back(atom);
  }

  std::filesystem::create_directories(out_dir);
  nlohmann::ordered_json manifest;
  manifest["kind"] = unsound ? "unsound" : "sound";
  manifest["base_seed"] = seed;
  manifest["count"] = count;
  manifest["max_links"] = max_links;
  auto files = nlohmann::ordered_json::array();

  for (int i = 0; i < count; ++i) {
    spec.seed = seed + static_cast<uint64_t>(i);
    ProofGraph g = unsound ? generate_unsound(spec) : generate_sound(spec);
    char name[32];
    std::snprintf(name, sizeof name, "%s_%04d.json", unsound ? "unsound" : "sound", i);
    spill((std::filesystem::path(out_dir) / name).string(), graph_to_json(g));
    files.push_back({{"file", name},
                     {"seed", spec.seed},
                     {"nodes", g.node_count()},
                     {"links", g.link_count()},
                     {"switchables", switchable_links(g).size()}});
  }
  manifest["files"] = std::move(files);
  spill((std::filesystem::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  std::cout << "wrote " << count << " graphs and manifest.json to " << out_dir << "\n";
  return kOk;
}

int run_dot(const std::string& file, const std::string& out) {
  std::string text = slurp(file);
  try {
    spill(out, graph_to_dot(graph_from_json(text)));
    return kOk;
  } catch (const StructuralError&) {
  }
  spill(out, derivation_to_dot(derivation_from_json(text)));
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-Graph workbench: soundness, empires, split nodes, sequentialization"};
  app.require_subcommand(1);

  std::string file, out, dot_path, node, side = "north", witness, format = "text", atoms;
  int max_switchables = 0, count = 1, max_links = 10;
  bool oracle = false, encode_units = false, sound_flag = false, unsound_flag = false;
  uint64_t seed = 0;
  double mutation_rate = 0.25;

  auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--max-switchables", max_switchables,
                    "Switchable-link bound for exhaustive checks (default 20, or "
                    "NGRAPH_MAX_SWITCHABLES)");
  };

  auto* check = app.add_subcommand("check", "Decide whether a proof-graph is a sound N-Graph");
  check->add_option("file", file, "Graph JSON ('-' for stdin)")->required();
  add_limit(check);
  check->add_option("--witness-dot", dot_path, "Write the failing switching as DOT here");

  auto* empire = app.add_subcommand("empire", "Compute an empire of a node");
  empire->add_option("file", file, "Graph JSON ('-' for stdin)")->required();
  empire->add_option("--node", node, "Root node id")->required();
  empire->add_option("--side", side, "north, south, or whole")->required();
  empire->add_flag("--oracle", oracle,
                   "Intersect over every switching instead of the closure rules");
  add_limit(empire);
  empire->add_option("--dot", dot_path, "Write the highlighted graph as DOT here");

  auto* split = app.add_subcommand("split", "Find the split node used by the cut case");
  split->add_option("file", file, "Graph JSON ('-' for stdin)")->required();
  add_limit(split);
  split->add_option("--dot", dot_path, "Write the two-cluster rendering as DOT here");

  auto* seq = app.add_subcommand("sequentialize", "Translate a sound N-Graph to LK");
  seq->add_option("file", file, "Graph JSON ('-' for stdin)")->required();
  seq->add_flag("--encode-units", encode_units, "Rewrite T and F away using a witness atom");
  seq->add_option("--witness", witness, "Witness atom for --encode-units");
  seq->add_option("--format", format, "text (default), json, or dot");
  seq->add_option("--out", out, "Output path (default stdout)");
  add_limit(seq);

  auto* verify = app.add_subcommand("verify-lk", "Check a derivation JSON against the rules");
  verify->add_option("file", file, "Derivation JSON ('-' for stdin)")->required();

  auto* gen = app.add_subcommand("gen", "Generate random graphs with a manifest");
  gen->add_flag("--sound", sound_flag, "Generate sound N-Graphs (default)");
  gen->add_flag("--unsound", unsound_flag, "Generate unsound proof-graphs");
  gen->add_option("--seed", seed, "Base seed; graph i uses seed+i");
  gen->add_option("--count", count, "How many graphs");
  gen->add_option("--max-links", max_links, "Link budget per graph");
  gen->add_option("--atoms", atoms, "Comma-separated atom pool");
  gen->add_option("--mutation-rate", mutation_rate, "Chance of stacking a second defect");
  gen->add_option("--out", out, "Output directory")->required();

  auto* dot = app.add_subcommand("dot", "Render graph or derivation JSON as DOT");
  dot->add_option("file", file, "JSON input ('-' for stdin)")->required();
  dot->add_option("--out", out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(file, max_switchables, dot_path);
    if (empire->parsed())
      return run_empire(file, node, side, oracle, max_switchables, dot_path);
    if (split->parsed()) return run_split(file, max_switchables, dot_path);
    if (seq->parsed())
      return run_sequentialize(file, encode_units, witness, format, out, max_switchables);
    if (verify->parsed()) return run_verify_lk(file);
    if (gen->parsed()) {
      if (sound_flag && unsound_flag)
        throw DomainError("--sound and --unsound are mutually exclusive");
      return run_gen(unsound_flag, seed, count, max_links, atoms, mutation_rate, out);
    }
    if (dot->parsed()) return run_dot(file, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.position() << ": " << e.what() << "\n";
    return kNoVerdict;
  } catch (const StructuralError& e) {
    std::cerr << "not a proof-graph: " << e.what() << "\n";
    return kNoVerdict;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << " (" << e.switchable_count()
              << " switchable links, bound " << e.bound()
              << "; raise --max-switchables)\n";
    return kNoVerdict;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kNoVerdict;
  } catch (const SequentializeError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const DomainError& e) {
    std::cerr << "bad request: " << e.what() << "\n";
    return kNoVerdict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoVerdict;
  }
  return kNoVerdict;
}
