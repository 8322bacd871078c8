#include "ngraph/proof_graph.hpp"

#include <algorithm>
#include <map>

#include "ngraph/errors.hpp"

namespace ngraph {

LinkShape shape_of(LinkKind k) {
  switch (k) {
  case LinkKind::AndEL:
  case LinkKind::AndER:
  case LinkKind::OrIL:
  case LinkKind::OrIR:
  case LinkKind::TopSW:
  case LinkKind::BotSW:
    return LinkShape::Simple;
  case LinkKind::AndI:
  case LinkKind::BotLink:
  case LinkKind::ImpE:
  case LinkKind::TopFW:
  case LinkKind::Contraction:
    return LinkShape::Focussing;
  default:
    return LinkShape::Defocussing;
  }
}

Polarity polarity_of(LinkKind k) {
  switch (k) {
  case LinkKind::AndI:
  case LinkKind::BotLink:
  case LinkKind::ImpE:
  case LinkKind::TopFW:
  case LinkKind::Expansion:
    return Polarity::Conjunctive;
  case LinkKind::OrE:
  case LinkKind::TopLink:
  case LinkKind::ImpI:
  case LinkKind::BotDW:
  case LinkKind::Contraction:
    return Polarity::Disjunctive;
  default:
    return Polarity::None;
  }
}

bool is_switchable(LinkKind k) {
  return k == LinkKind::Contraction || k == LinkKind::Expansion || k == LinkKind::ImpI;
}

std::string to_string(LinkKind k) {
  switch (k) {
  case LinkKind::AndEL: return "AndEL";
  case LinkKind::AndER: return "AndER";
  case LinkKind::OrIL: return "OrIL";
  case LinkKind::OrIR: return "OrIR";
  case LinkKind::TopSW: return "TopSW";
  case LinkKind::BotSW: return "BotSW";
  case LinkKind::AndI: return "AndI";
  case LinkKind::BotLink: return "BotLink";
  case LinkKind::ImpE: return "ImpE";
  case LinkKind::TopFW: return "TopFW";
  case LinkKind::Contraction: return "Contraction";
  case LinkKind::OrE: return "OrE";
  case LinkKind::TopLink: return "TopLink";
  case LinkKind::BotDW: return "BotDW";
  case LinkKind::Expansion: return "Expansion";
  case LinkKind::ImpI: return "ImpI";
  }
  return "?";
}

std::optional<LinkKind> link_kind_from_string(const std::string& name) {
  static const std::map<std::string, LinkKind> table = {
      {"AndEL", LinkKind::AndEL},   {"AndER", LinkKind::AndER},
      {"OrIL", LinkKind::OrIL},     {"OrIR", LinkKind::OrIR},
      {"TopSW", LinkKind::TopSW},   {"BotSW", LinkKind::BotSW},
      {"AndI", LinkKind::AndI},     {"BotLink", LinkKind::BotLink},
      {"ImpE", LinkKind::ImpE},     {"TopFW", LinkKind::TopFW},
      {"Contraction", LinkKind::Contraction}, {"OrE", LinkKind::OrE},
      {"TopLink", LinkKind::TopLink}, {"BotDW", LinkKind::BotDW},
      {"Expansion", LinkKind::Expansion}, {"ImpI", LinkKind::ImpI},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

// Checks the label equations of one link; nodes already resolved.
// Returns an empty string when the schema holds, else a description.
std::string schema_error(LinkKind kind, const std::vector<Formula>& p,
                         const std::vector<Formula>& c, const Formula* hyp) {
  using K = Formula::Kind;
  auto is = [](const Formula& f, K k) { return f.kind() == k; };
  switch (kind) {
  case LinkKind::AndEL:
    if (!is(p[0], K::And) || p[0].left() != c[0]) return "premise must be (conclusion & _)";
    return {};
  case LinkKind::AndER:
    if (!is(p[0], K::And) || p[0].right() != c[0]) return "premise must be (_ & conclusion)";
    return {};
  case LinkKind::OrIL:
    if (!is(c[0], K::Or) || c[0].left() != p[0]) return "conclusion must be (premise | _)";
    return {};
  case LinkKind::OrIR:
    if (!is(c[0], K::Or) || c[0].right() != p[0]) return "conclusion must be (_ | premise)";
    return {};
  case LinkKind::TopSW:
    if (!is(c[0], K::Top)) return "conclusion must be T";
    return {};
  case LinkKind::BotSW:
    if (!is(p[0], K::Bottom)) return "premise must be F";
    return {};
  case LinkKind::AndI:
    if (!is(c[0], K::And) || c[0].left() != p[0] || c[0].right() != p[1])
      return "conclusion must be (premise1 & premise2)";
    return {};
  case LinkKind::BotLink:
    if (!is(p[1], K::Neg) || p[1].left() != p[0]) return "second premise must be ~first";
    if (!is(c[0], K::Bottom)) return "conclusion must be F";
    return {};
  case LinkKind::ImpE:
    if (!is(p[1], K::Imp) || p[1].left() != p[0] || p[1].right() != c[0])
      return "second premise must be (first -> conclusion)";
    return {};
  case LinkKind::TopFW:
    if (!is(p[0], K::Top)) return "first premise must be T";
    if (p[1] != c[0]) return "conclusion must equal second premise";
    return {};
  case LinkKind::Contraction:
    if (p[0] != p[1] || p[0] != c[0]) return "all three labels must be equal";
    return {};
  case LinkKind::OrE:
    if (!is(p[0], K::Or) || p[0].left() != c[0] || p[0].right() != c[1])
      return "premise must be (conclusion1 | conclusion2)";
    return {};
  case LinkKind::TopLink:
    if (!is(p[0], K::Top)) return "premise must be T";
    if (!is(c[1], K::Neg) || c[1].left() != c[0]) return "second conclusion must be ~first";
    return {};
  case LinkKind::BotDW:
    if (c[0] != p[0]) return "first conclusion must equal premise";
    if (!is(c[1], K::Bottom)) return "second conclusion must be F";
    return {};
  case LinkKind::Expansion:
    if (p[0] != c[0] || p[0] != c[1]) return "all three labels must be equal";
    return {};
  case LinkKind::ImpI:
    if (!is(c[0], K::Imp) || c[0].left() != *hyp || c[0].right() != p[0])
      return "conclusion must be (hypothesis -> premise)";
    return {};
  }
  return "unknown link kind";
}

} // namespace

std::vector<StructuralViolation> validate(const std::vector<Node>& nodes,
                                          const std::vector<Link>& links) {
  using V = StructuralViolation;
  std::vector<V> out;
  std::map<NodeId, int> index;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!index.emplace(nodes[i].id, static_cast<int>(i)).second)
      out.push_back({V::Kind::DuplicateNodeId, nodes[i].id, "duplicate node id"});
  }

  std::map<NodeId, int> premise_uses, conclusion_uses;
  for (size_t li = 0; li < links.size(); ++li) {
    const Link& l = links[li];
    std::string subject = "link #" + std::to_string(li) + " (" + to_string(l.kind) + ")";

    size_t want_p = shape_of(l.kind) == LinkShape::Focussing ? 2 : 1;
    size_t want_c = shape_of(l.kind) == LinkShape::Defocussing ? 2 : 1;
    bool want_hyp = l.kind == LinkKind::ImpI;
    if (want_hyp) want_c = 1; // the second conclusion position is the hypothesis
    if (l.premises.size() != want_p || l.conclusions.size() != want_c ||
        l.hypothesis.has_value() != want_hyp) {
      out.push_back({V::Kind::BadArity, subject, "wrong number of premises/conclusions"});
      continue;
    }

    bool resolved = true;
    auto check_id = [&](const NodeId& id) {
      if (!index.count(id)) {
        out.push_back({V::Kind::UnknownNodeId, subject, "unknown node id '" + id + "'"});
        resolved = false;
      }
    };
    for (const auto& id : l.premises) check_id(id);
    for (const auto& id : l.conclusions) check_id(id);
    if (l.hypothesis) check_id(*l.hypothesis);
    if (!resolved) continue;

    std::vector<Formula> p, c;
    for (const auto& id : l.premises) p.push_back(nodes[index[id]].label);
    for (const auto& id : l.conclusions) c.push_back(nodes[index[id]].label);
    Formula hyp_label;
    if (l.hypothesis) hyp_label = nodes[index[*l.hypothesis]].label;
    std::string err = schema_error(l.kind, p, c, l.hypothesis ? &hyp_label : nullptr);
    if (!err.empty()) out.push_back({V::Kind::SchemaMismatch, subject, err});

    for (const auto& id : l.premises)
      if (++premise_uses[id] == 2)
        out.push_back({V::Kind::DoubleUsePremise, id, "node is premise of more than one link"});
    for (const auto& id : l.conclusions)
      if (++conclusion_uses[id] == 2)
        out.push_back(
            {V::Kind::DoubleUseConclusion, id, "node is conclusion of more than one link"});
    if (l.hypothesis)
      if (++conclusion_uses[*l.hypothesis] == 2)
        out.push_back({V::Kind::DoubleUseConclusion, *l.hypothesis,
                       "node is conclusion of more than one link"});
  }
  return out;
}

ProofGraph::ProofGraph(std::vector<Node> nodes, std::vector<Link> links)
    : nodes_(std::move(nodes)), links_(std::move(links)) {
  auto violations = validate(nodes_, links_);
  if (!violations.empty())
    throw StructuralError(violations.front().message + " [" + violations.front().subject + "]",
                          violations.front().subject);

  std::map<NodeId, int> index;
  for (size_t i = 0; i < nodes_.size(); ++i) index.emplace(nodes_[i].id, static_cast<int>(i));

  int n = node_count();
  used_by_.assign(n, -1);
  concluded_by_.assign(n, -1);
  std::vector<int> in_solid(n, 0), in_meta(n, 0), out_deg(n, 0);

  for (size_t li = 0; li < links_.size(); ++li) {
    const Link& l = links_[li];
    LinkView v;
    v.kind = l.kind;
    for (const auto& id : l.premises) v.premises.push_back(index[id]);
    for (const auto& id : l.conclusions) v.conclusions.push_back(index[id]);
    if (l.hypothesis) v.hypothesis = index[*l.hypothesis];

    for (int p : v.premises) used_by_[p] = static_cast<int>(li);
    for (int c : v.conclusions) concluded_by_[c] = static_cast<int>(li);
    if (v.hypothesis >= 0) concluded_by_[v.hypothesis] = static_cast<int>(li);

    for (int p : v.premises)
      for (int c : v.conclusions) {
        edges_.push_back({p, c, static_cast<int>(li), false});
        ++out_deg[p];
        ++in_solid[c];
      }
    if (v.hypothesis >= 0) {
      edges_.push_back({v.premises[0], v.hypothesis, static_cast<int>(li), true});
      ++out_deg[v.premises[0]];
      ++in_meta[v.hypothesis];
    }
    views_.push_back(std::move(v));
  }

  premises_ = NodeSet(n);
  conclusions_ = NodeSet(n);
  hypotheses_ = NodeSet(n);
  for (int i = 0; i < n; ++i) {
    if (in_solid[i] == 0 && in_meta[i] == 0) premises_.insert(i);
    if (out_deg[i] == 0) conclusions_.insert(i);
    if (in_solid[i] == 0 && in_meta[i] == 1) hypotheses_.insert(i);
  }
}

int ProofGraph::node_index(const NodeId& id) const {
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return static_cast<int>(i);
  throw StructuralError("unknown node id '" + id + "'", id);
}

Sequent ProofGraph::end_sequent() const {
  std::vector<int> ante = premises_.to_indices(), succ = conclusions_.to_indices();
  auto by_id = [this](int a, int b) { return nodes_[a].id < nodes_[b].id; };
  std::sort(ante.begin(), ante.end(), by_id);
  std::sort(succ.begin(), succ.end(), by_id);
  Sequent s;
  for (int i : ante) s.antecedent.push_back(nodes_[i].label);
  for (int i : succ) s.succedent.push_back(nodes_[i].label);
  return s;
}

ProofGraph ProofGraph::induced(const NodeSet& members) const {
  std::vector<Node> ns;
  for (int i = 0; i < node_count(); ++i)
    if (members.contains(i)) ns.push_back(nodes_[i]);
  std::vector<Link> ls;
  for (size_t li = 0; li < links_.size(); ++li) {
    const LinkView& v = views_[li];
    bool all_in = true;
    for (int p : v.premises) all_in = all_in && members.contains(p);
    for (int c : v.conclusions) all_in = all_in && members.contains(c);
    if (v.hypothesis >= 0) all_in = all_in && members.contains(v.hypothesis);
    if (all_in) ls.push_back(links_[li]);
  }
  return ProofGraph(std::move(ns), std::move(ls));
}

} // namespace ngraph
