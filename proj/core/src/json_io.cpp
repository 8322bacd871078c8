#include "ngraph/json_io.hpp"

#include <json.hpp>

#include "ngraph/errors.hpp"

namespace ngraph {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

const json& field(const json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw StructuralError(std::string(where) + " is missing \"" + key + "\"");
  return *it;
}

std::string text_field(const json& j, const char* key, const char* where) {
  const json& v = field(j, key, where);
  if (!v.is_string())
    throw StructuralError(std::string(where) + " field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<NodeId> id_list(const json& j, const char* key, const char* where) {
  const json& v = field(j, key, where);
  if (!v.is_array())
    throw StructuralError(std::string(where) + " field \"" + key + "\" must be an array");
  std::vector<NodeId> out;
  for (const auto& e : v) {
    if (!e.is_string())
      throw StructuralError(std::string(where) + " field \"" + key + "\" must hold strings");
    out.push_back(e.get<NodeId>());
  }
  return out;
}

std::vector<Formula> formula_list(const json& v, const char* where) {
  if (!v.is_array())
    throw StructuralError(std::string(where) + " must be an array of formula strings");
  std::vector<Formula> out;
  for (const auto& e : v) {
    if (!e.is_string())
      throw StructuralError(std::string(where) + " must hold formula strings");
    out.push_back(parse_formula(e.get<std::string>()));
  }
  return out;
}

json sequent_to_json(const Sequent& s) {
  json ant = json::array(), suc = json::array();
  for (const auto& f : s.antecedent) ant.push_back(f.to_string());
  for (const auto& f : s.succedent) suc.push_back(f.to_string());
  return json{{"antecedent", std::move(ant)}, {"succedent", std::move(suc)}};
}

json derivation_tree(const LKDerivation& d) {
  json premises = json::array();
  for (const auto& p : d.premises) premises.push_back(derivation_tree(p));
  return json{{"rule", to_string(d.rule)},
              {"conclusion", sequent_to_json(d.conclusion)},
              {"premises", std::move(premises)}};
}

LKDerivation derivation_of(const json& j) {
  if (!j.is_object()) throw StructuralError("a derivation must be an object");
  std::string rule_name = text_field(j, "rule", "a derivation");
  auto rule = lk_rule_from_string(rule_name);
  if (!rule) throw StructuralError("unknown rule \"" + rule_name + "\"");

  const json& conclusion = field(j, "conclusion", "a derivation");
  if (!conclusion.is_object())
    throw StructuralError("a derivation's \"conclusion\" must be an object");
  LKDerivation out;
  out.rule = *rule;
  out.conclusion.antecedent =
      formula_list(field(conclusion, "antecedent", "a conclusion"), "\"antecedent\"");
  out.conclusion.succedent =
      formula_list(field(conclusion, "succedent", "a conclusion"), "\"succedent\"");

  const json& premises = field(j, "premises", "a derivation");
  if (!premises.is_array())
    throw StructuralError("a derivation's \"premises\" must be an array");
  for (const auto& p : premises) out.premises.push_back(derivation_of(p));
  return out;
}

} // namespace

std::string graph_to_json(const ProofGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes())
    nodes.push_back(json{{"id", n.id}, {"formula", n.label.to_string()}});
  json links = json::array();
  for (const auto& l : g.links()) {
    json jl{{"kind", to_string(l.kind)},
            {"premises", l.premises},
            {"conclusions", l.conclusions}};
    if (l.hypothesis) jl["hypothesis"] = *l.hypothesis;
    links.push_back(std::move(jl));
  }
  return json{{"nodes", std::move(nodes)}, {"links", std::move(links)}}.dump(2) + "\n";
}

ProofGraph graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw StructuralError("a graph must be an object");

  const json& jnodes = field(j, "nodes", "a graph");
  if (!jnodes.is_array()) throw StructuralError("\"nodes\" must be an array");
  std::vector<Node> nodes;
  for (const auto& jn : jnodes) {
    if (!jn.is_object()) throw StructuralError("each node must be an object");
    nodes.push_back(Node{text_field(jn, "id", "a node"),
                         parse_formula(text_field(jn, "formula", "a node"))});
  }

  const json& jlinks = field(j, "links", "a graph");
  if (!jlinks.is_array()) throw StructuralError("\"links\" must be an array");
  std::vector<Link> links;
  for (const auto& jl : jlinks) {
    if (!jl.is_object()) throw StructuralError("each link must be an object");
    std::string kind_name = text_field(jl, "kind", "a link");
    auto kind = link_kind_from_string(kind_name);
    if (!kind) throw StructuralError("unknown link kind \"" + kind_name + "\"");
    Link l{*kind, id_list(jl, "premises", "a link"), id_list(jl, "conclusions", "a link"),
           std::nullopt};
    if (jl.contains("hypothesis")) l.hypothesis = text_field(jl, "hypothesis", "a link");
    links.push_back(std::move(l));
  }
  return ProofGraph(std::move(nodes), std::move(links));
}

std::string derivation_to_json(const LKDerivation& d) {
  return derivation_tree(d).dump(2) + "\n";
}

LKDerivation derivation_from_json(const std::string& text) {
  return derivation_of(parse(text));
}

} // namespace ngraph
