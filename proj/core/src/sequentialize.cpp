#include "ngraph/sequentialize.hpp"

#include <algorithm>

#include "ngraph/empires.hpp"
#include "ngraph/errors.hpp"
#include "ngraph/split.hpp"

namespace ngraph {

namespace {

LKDerivation axiom(const Formula& f) {
  return LKDerivation{LKRule::Axiom, Sequent{{f}, {f}}, std::nullopt, {}};
}

LKDerivation unary(LKRule rule, Sequent conclusion, Formula principal, LKDerivation premise) {
  return LKDerivation{rule, std::move(conclusion), std::move(principal), {std::move(premise)}};
}

} // namespace

LKDerivation single_link_derivation(const ProofGraph& g, int link_index) {
  const auto& v = g.link_views()[link_index];
  if (is_switchable(v.kind))
    throw PreconditionError("no local derivation for " + to_string(v.kind) + " links");

  auto P = [&](int i) { return g.label(v.premises[i]); };
  auto C = [&](int i) { return g.label(v.conclusions[i]); };

  switch (v.kind) {
  case LinkKind::AndEL:
    return unary(LKRule::AndL1, Sequent{{P(0)}, {C(0)}}, P(0), axiom(C(0)));
  case LinkKind::AndER:
    return unary(LKRule::AndL2, Sequent{{P(0)}, {C(0)}}, P(0), axiom(C(0)));
  case LinkKind::OrIL:
    return unary(LKRule::OrR1, Sequent{{P(0)}, {C(0)}}, C(0), axiom(P(0)));
  case LinkKind::OrIR:
    return unary(LKRule::OrR2, Sequent{{P(0)}, {C(0)}}, C(0), axiom(P(0)));
  case LinkKind::TopSW: {
    LKDerivation top{LKRule::TopR, Sequent{{}, {C(0)}}, C(0), {}};
    return unary(LKRule::LW, Sequent{{P(0)}, {C(0)}}, P(0), std::move(top));
  }
  case LinkKind::BotSW: {
    LKDerivation bot{LKRule::BotL, Sequent{{P(0)}, {}}, P(0), {}};
    return unary(LKRule::RW, Sequent{{P(0)}, {C(0)}}, C(0), std::move(bot));
  }
  case LinkKind::AndI:
    return LKDerivation{LKRule::AndR, Sequent{{P(0), P(1)}, {C(0)}}, C(0),
                        {axiom(P(0)), axiom(P(1))}};
  case LinkKind::BotLink: {
    // A, ~A |- then weaken in F on the right.
    LKDerivation neg =
        unary(LKRule::NegL, Sequent{{P(0), P(1)}, {}}, P(1), axiom(P(0)));
    return unary(LKRule::RW, Sequent{{P(0), P(1)}, {C(0)}}, C(0), std::move(neg));
  }
  case LinkKind::ImpE:
    return LKDerivation{LKRule::ImpL, Sequent{{P(0), P(1)}, {C(0)}}, P(1),
                        {axiom(P(0)), axiom(C(0))}};
  case LinkKind::TopFW:
    return unary(LKRule::LW, Sequent{{P(0), P(1)}, {C(0)}}, P(0), axiom(P(1)));
  case LinkKind::OrE:
    return LKDerivation{LKRule::OrL, Sequent{{P(0)}, {C(0), C(1)}}, P(0),
                        {axiom(C(0)), axiom(C(1))}};
  case LinkKind::TopLink: {
    // |- A, ~A then weaken in T on the left.
    LKDerivation neg =
        unary(LKRule::NegR, Sequent{{}, {C(0), C(1)}}, C(1), axiom(C(0)));
    return unary(LKRule::LW, Sequent{{P(0)}, {C(0), C(1)}}, P(0), std::move(neg));
  }
  case LinkKind::BotDW:
    return unary(LKRule::RW, Sequent{{P(0)}, {C(0), C(1)}}, C(1), axiom(P(0)));
  default:
    throw PreconditionError("no local derivation for " + to_string(v.kind) + " links");
  }
}

namespace {

ProofGraph remove_link_and_nodes(const ProofGraph& g, int link_index,
                                 const std::vector<int>& dropped_nodes) {
  std::vector<Node> nodes;
  for (int i = 0; i < g.node_count(); ++i)
    if (std::find(dropped_nodes.begin(), dropped_nodes.end(), i) == dropped_nodes.end())
      nodes.push_back(g.node(i));
  std::vector<Link> links;
  for (int li = 0; li < g.link_count(); ++li)
    if (li != link_index) links.push_back(g.links()[li]);
  return ProofGraph(std::move(nodes), std::move(links));
}

struct Sequentializer {
  SequentializeOptions options;

  void verify_intermediate(const ProofGraph& g, const char* what) {
    if (options.verify == SequentializeOptions::Verify::Never) return;
    if (options.verify == SequentializeOptions::Verify::Auto &&
        static_cast<int>(switchable_links(g).size()) > options.limit.max_switchables)
      return;
    Verdict v = is_ngraph(g, options.limit);
    if (!v.sound)
      throw SequentializeError(std::string("intermediate graph after ") + what +
                               " is not sound; the reduction should have preserved soundness");
  }

  // The reducible link of the given kind whose removed node has the smallest
  // id, or -1. The removed node: expansion premise, contraction conclusion,
  // ImpI main conclusion.
  int pick(const ProofGraph& g, LinkKind kind) const {
    int best = -1;
    const NodeId* best_id = nullptr;
    for (int li = 0; li < g.link_count(); ++li) {
      const auto& v = g.link_views()[li];
      if (v.kind != kind) continue;
      int node;
      if (kind == LinkKind::Expansion) {
        node = v.premises[0];
        if (!g.premises().contains(node)) continue;
      } else {
        node = v.conclusions[0];
        if (!g.conclusions().contains(node)) continue;
      }
      if (best < 0 || g.node(node).id < *best_id) {
        best = li;
        best_id = &g.node(node).id;
      }
    }
    return best;
  }

  LKDerivation run(const ProofGraph& g) {
    LKDerivation d = dispatch(g);
    if (!sequent_equal(d.conclusion, g.end_sequent()))
      throw SequentializeError("derivation ends in " + d.conclusion.to_string() +
                               " but the graph's sequent is " + g.end_sequent().to_string());
    return d;
  }

  LKDerivation dispatch(const ProofGraph& g) {
    if (g.link_count() == 0) {
      if (g.node_count() != 1)
        throw SequentializeError("link-free graph with " + std::to_string(g.node_count()) +
                                 " nodes cannot be sound");
      return axiom(g.label(0));
    }
    if (g.link_count() == 1 && !is_switchable(g.links()[0].kind))
      return single_link_derivation(g, 0);

    if (int li = pick(g, LinkKind::Expansion); li >= 0) {
      const auto& v = g.link_views()[li];
      Formula a = g.label(v.premises[0]);
      ProofGraph reduced = remove_link_and_nodes(g, li, {v.premises[0]});
      verify_intermediate(reduced, "removing an initial expansion");
      LKDerivation sub = run(reduced);
      return unary(LKRule::LC, g.end_sequent(), std::move(a), std::move(sub));
    }
    if (int li = pick(g, LinkKind::Contraction); li >= 0) {
      const auto& v = g.link_views()[li];
      Formula a = g.label(v.conclusions[0]);
      ProofGraph reduced = remove_link_and_nodes(g, li, {v.conclusions[0]});
      verify_intermediate(reduced, "removing a final contraction");
      LKDerivation sub = run(reduced);
      return unary(LKRule::RC, g.end_sequent(), std::move(a), std::move(sub));
    }
    if (int li = pick(g, LinkKind::ImpI); li >= 0) {
      const auto& v = g.link_views()[li];
      Formula main = g.label(v.conclusions[0]);
      ProofGraph reduced = remove_link_and_nodes(g, li, {v.conclusions[0]});
      verify_intermediate(reduced, "removing a final implication introduction");
      LKDerivation sub = run(reduced);
      return unary(LKRule::ImpR, g.end_sequent(), std::move(main), std::move(sub));
    }

    SplitResult split = find_split(g, options.limit);
    ProofGraph north = empire_subgraph(g, split.north);
    ProofGraph south = empire_subgraph(g, split.south);
    verify_intermediate(north, "cutting at the split node (north side)");
    verify_intermediate(south, "cutting at the split node (south side)");
    LKDerivation dn = run(north);
    LKDerivation ds = run(south);
    Formula cut = g.label(g.node_index(split.node));
    return LKDerivation{LKRule::Cut, g.end_sequent(), std::move(cut),
                        {std::move(dn), std::move(ds)}};
  }
};

} // namespace

LKDerivation sequentialize(const ProofGraph& g, const SequentializeOptions& options) {
  if (options.verify != SequentializeOptions::Verify::Never) {
    bool check = options.verify == SequentializeOptions::Verify::Always ||
                 static_cast<int>(switchable_links(g).size()) <= options.limit.max_switchables;
    if (check && !is_ngraph(g, options.limit).sound)
      throw SequentializeError("input graph is not a sound N-Graph");
  }
  Sequentializer seq{options};
  LKDerivation d = seq.run(g);
  if (options.encode_units) {
    std::string name = options.unit_witness.value_or("");
    if (name.empty()) {
      std::vector<std::string> atoms;
      for (const auto& n : g.nodes()) n.label.collect_atoms(atoms);
      std::sort(atoms.begin(), atoms.end());
      name = atoms.empty() ? "a" : atoms.front();
    }
    d = encode_units_derivation(d, Formula::atom(name));
  }
  return d;
}

namespace {

Sequent map_sequent(const Sequent& s, const Formula& w) {
  Sequent out;
  for (const auto& f : s.antecedent) out.antecedent.push_back(encode_units(f, w));
  for (const auto& f : s.succedent) out.succedent.push_back(encode_units(f, w));
  return out;
}

// |- w | ~w from an axiom on w.
LKDerivation excluded_middle(const Formula& w) {
  Formula nw = Formula::neg(w);
  Formula disj = Formula::disj(w, nw);
  LKDerivation d = axiom(w);
  d = unary(LKRule::NegR, Sequent{{}, {w, nw}}, nw, std::move(d));
  d = unary(LKRule::OrR1, Sequent{{}, {disj, nw}}, disj, std::move(d));
  d = unary(LKRule::OrR2, Sequent{{}, {disj, disj}}, disj, std::move(d));
  return unary(LKRule::RC, Sequent{{}, {disj}}, disj, std::move(d));
}

// w & ~w |- from an axiom on w.
LKDerivation contradiction(const Formula& w) {
  Formula nw = Formula::neg(w);
  Formula conj = Formula::conj(w, nw);
  LKDerivation d = axiom(w);
  d = unary(LKRule::NegL, Sequent{{w, nw}, {}}, nw, std::move(d));
  d = unary(LKRule::AndL2, Sequent{{w, conj}, {}}, conj, std::move(d));
  d = unary(LKRule::AndL1, Sequent{{conj, conj}, {}}, conj, std::move(d));
  return unary(LKRule::LC, Sequent{{conj}, {}}, conj, std::move(d));
}

// Rebuilds `core` (ending in a one-formula sequent) up to `target` by
// weakening in the remaining context formulas one at a time.
LKDerivation weaken_to(LKDerivation core, const Sequent& target) {
  Sequent current = core.conclusion;
  std::vector<Formula> need_left = target.antecedent, need_right = target.succedent;
  for (const auto& f : current.antecedent) {
    auto it = std::find(need_left.begin(), need_left.end(), f);
    need_left.erase(it);
  }
  for (const auto& f : current.succedent) {
    auto it = std::find(need_right.begin(), need_right.end(), f);
    need_right.erase(it);
  }
  for (const auto& f : need_left) {
    current.antecedent.push_back(f);
    core = unary(LKRule::LW, current, f, std::move(core));
  }
  for (const auto& f : need_right) {
    current.succedent.push_back(f);
    core = unary(LKRule::RW, current, f, std::move(core));
  }
  return core;
}

} // namespace

LKDerivation encode_units_derivation(const LKDerivation& d, const Formula& witness) {
  Sequent mapped = map_sequent(d.conclusion, witness);
  if (d.rule == LKRule::TopR) return weaken_to(excluded_middle(witness), mapped);
  if (d.rule == LKRule::BotL) return weaken_to(contradiction(witness), mapped);

  LKDerivation out;
  out.rule = d.rule;
  out.conclusion = std::move(mapped);
  if (d.principal) out.principal = encode_units(*d.principal, witness);
  for (const auto& p : d.premises)
    out.premises.push_back(encode_units_derivation(p, witness));
  return out;
}

} // namespace ngraph
