#include "ngraph/dot.hpp"

#include <set>
#include <sstream>

namespace ngraph {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node_label(const Node& n) {
  return quoted(n.id + "\\n" + n.label.to_string());
}

void emit_nodes(std::ostringstream& out, const ProofGraph& g) {
  for (int i = 0; i < g.node_count(); ++i)
    out << "  " << quoted(g.node(i).id) << " [label=" << node_label(g.node(i)) << "];\n";
}

void emit_edge(std::ostringstream& out, const ProofGraph& g, const ProofGraph::Edge& e,
               const std::string& attrs) {
  out << "  " << quoted(g.node(e.from).id) << " -> " << quoted(g.node(e.to).id);
  if (!attrs.empty()) out << " [" << attrs << "]";
  out << ";\n";
}

std::string base_edge_attrs(const ProofGraph& g, const ProofGraph::Edge& e) {
  if (e.meta) return "style=dashed, label=\"m\"";
  LinkKind k = g.links()[e.link].kind;
  if (k == LinkKind::Contraction || k == LinkKind::Expansion) return "style=dotted";
  return "";
}

} // namespace

std::string graph_to_dot(const ProofGraph& g) {
  std::ostringstream out;
  out << "digraph proof_graph {\n  node [shape=box];\n";
  emit_nodes(out, g);
  for (const auto& e : g.edges()) emit_edge(out, g, e, base_edge_attrs(g, e));
  out << "}\n";
  return out.str();
}

std::string switching_to_dot(const ProofGraph& g, const MetaSwitching& s) {
  std::set<std::pair<int, int>> kept_virtual, kept_solid;
  for (const auto& e : switching_graph(g, s))
    (e.is_virtual ? kept_virtual : kept_solid).insert({e.upper, e.lower});

  std::ostringstream out;
  out << "digraph switching {\n  node [shape=box];\n";
  emit_nodes(out, g);
  for (const auto& e : g.edges()) {
    if (e.meta) {
      emit_edge(out, g, e, "style=dashed, label=\"m\", color=gray");
    } else if (kept_solid.count({e.from, e.to})) {
      emit_edge(out, g, e, "");
    } else {
      emit_edge(out, g, e, "style=dashed, color=gray");
    }
  }
  for (const auto& [upper, lower] : kept_virtual)
    out << "  " << quoted(g.node(upper).id) << " -> " << quoted(g.node(lower).id)
        << " [style=bold, label=\"v\"];\n";
  out << "}\n";
  return out.str();
}

std::string empire_to_dot(const ProofGraph& g, const Empire& e) {
  std::ostringstream out;
  out << "digraph empire {\n  node [shape=box];\n";
  int root = g.node_index(e.root);
  for (int i = 0; i < g.node_count(); ++i) {
    out << "  " << quoted(g.node(i).id) << " [label=" << node_label(g.node(i));
    if (i == root)
      out << ", style=filled, fillcolor=gold";
    else if (e.members.contains(i))
      out << ", style=filled, fillcolor=palegreen";
    out << "];\n";
  }
  for (const auto& ed : g.edges()) emit_edge(out, g, ed, base_edge_attrs(g, ed));
  out << "}\n";
  return out.str();
}

std::string split_to_dot(const ProofGraph& g, const SplitResult& r) {
  int split = g.node_index(r.node);
  std::ostringstream out;
  out << "digraph split {\n  node [shape=box];\n";
  out << "  " << quoted(g.node(split).id) << " [label=" << node_label(g.node(split))
      << ", style=filled, fillcolor=gold];\n";
  auto cluster = [&](const char* name, const NodeSet& members, const char* fill) {
    out << "  subgraph cluster_" << name << " {\n    label=" << quoted(name)
        << ";\n    style=filled;\n    fillcolor=" << fill << ";\n";
    for (int i = 0; i < g.node_count(); ++i)
      if (i != split && members.contains(i))
        out << "    " << quoted(g.node(i).id) << " [label=" << node_label(g.node(i))
            << "];\n";
    out << "  }\n";
  };
  cluster("north", r.north.members, "palegreen");
  cluster("south", r.south.members, "lightyellow");
  for (const auto& e : g.edges()) emit_edge(out, g, e, base_edge_attrs(g, e));
  out << "}\n";
  return out.str();
}

namespace {

int emit_derivation(std::ostringstream& out, const LKDerivation& d, int& counter) {
  int self = counter++;
  std::string label = to_string(d.rule);
  if (d.principal) label += " [" + d.principal->to_string() + "]";
  label += "\\n" + d.conclusion.to_string();
  out << "  d" << self << " [label=" << quoted(label) << "];\n";
  for (const auto& p : d.premises) {
    int child = emit_derivation(out, p, counter);
    out << "  d" << self << " -> d" << child << ";\n";
  }
  return self;
}

} // namespace

std::string derivation_to_dot(const LKDerivation& d) {
  std::ostringstream out;
  out << "digraph derivation {\n  node [shape=box];\n";
  int counter = 0;
  emit_derivation(out, d, counter);
  out << "}\n";
  return out.str();
}

} // namespace ngraph
