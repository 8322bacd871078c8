#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ngraph/formula.hpp"
#include "ngraph/proof_graph.hpp"

namespace ngraph {

// Incremental construction from steps that each keep every component sound:
// a step only ever hangs fresh leaf nodes onto an existing component, merges
// two components through a node every switching keeps connected, or
// identifies two nodes across components. Consequently every meta-switching
// graph of every component stays a tree, and build() of a single-component
// builder is a sound N-Graph by construction.
//
// "Available below" means the node is not yet the premise of any link;
// "available above" means it is not yet a conclusion or hypothesis of one.
// Steps throw PreconditionError when asked for anything else.
class GraphBuilder {
public:
  // Fresh isolated node, its own component. Ids are n0, n1, ... in creation
  // order, which makes builder runs reproducible.
  NodeId add_node(const Formula& label);

  // Hangs a simple or non-switchable defocussing link below conclusion c,
  // consuming it as the link's premise. `other` supplies the free subformula
  // where the schema has one (OrIL/OrIR/BotSW/TopLink); kinds whose premise
  // must have a specific shape (AndEL, AndER, OrE, TopLink, BotSW) check it.
  // Returns the ids of the new conclusion nodes.
  std::vector<NodeId> extend_below(const NodeId& c, LinkKind kind,
                                   const Formula& other = Formula::top());

  // Hangs a simple or non-switchable focussing link above premise p,
  // concluding into it, with fresh premise nodes as the schema dictates.
  // Returns the ids of the new premise nodes.
  std::vector<NodeId> extend_above(const NodeId& p, LinkKind kind,
                                   const Formula& other = Formula::top());

  // Joins two components with a focussing link over conclusions c1, c2 (in
  // schema order). AndI accepts any labels; BotLink wants label(c2) =
  // ~label(c1), ImpE wants label(c2) = label(c1) -> X, TopFW wants
  // label(c1) = T. Returns the new conclusion node.
  NodeId join(const NodeId& c1, const NodeId& c2, LinkKind kind);

  // Contracts two equal-labelled conclusions of one component into a fresh
  // node below them. Same-component is required: across components one of
  // the two kept-edge choices would strand the other side.
  NodeId contract(const NodeId& c1, const NodeId& c2);

  // Expands two equal-labelled premises of one component from a fresh node
  // above them.
  NodeId expand(const NodeId& p1, const NodeId& p2);

  // Discharges premise h from conclusion y (same component) into a fresh
  // implication node below y. h == y builds the identity A => A -> A.
  NodeId discharge(const NodeId& h, const NodeId& y);

  // Merges two components by identifying conclusion c with premise p (equal
  // labels): p's premise slot is rewired to c and p disappears.
  void glue(const NodeId& c, const NodeId& p);

  int link_count() const { return static_cast<int>(links_.size()); }
  int component_count() const { return components_; }
  bool same_component(const NodeId& a, const NodeId& b) const;

  bool known(const NodeId& id) const;
  const Formula& label(const NodeId& id) const;
  bool available_below(const NodeId& id) const; // premise slot still free
  bool available_above(const NodeId& id) const; // conclusion slot still free

  // Live nodes in creation order, then the links as added.
  std::vector<Node> nodes() const;
  const std::vector<Link>& links() const { return links_; }

  ProofGraph build() const;

private:
  int idx(const NodeId& id) const;
  NodeId fresh(const Formula& label);
  void add_link(Link link);
  int find(int a) const;
  void unite(int a, int b);

  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::map<NodeId, int> index_;
  std::vector<bool> dead_, premise_used_, conclusion_used_;
  mutable std::vector<int> parent_;
  int components_ = 0;
  int next_ = 0;
};

struct GeneratorSpec {
  uint64_t seed = 0;
  // Upper bound on links in the result (the connecting joins are budgeted
  // for, so growth stops early enough to finish within it).
  int max_links = 10;
  std::vector<std::string> atom_pool = {"a", "b", "c"};
  // Relative odds of trying a step for each kind; kinds not listed get 1.
  std::map<LinkKind, double> kind_weights;
  // generate_unsound only: chance of stacking one more defect onto the
  // first, rechecked so the stack cannot accidentally repair the graph.
  double mutation_rate = 0.25;
};

// Random sound N-Graph: grows components by weighted random steps, then
// joins the components into one. Deterministic per seed across platforms
// (raw mt19937_64 draws reduced by modulo; the std distributions are not
// pinned down by the standard and never used).
ProofGraph generate_sound(const GeneratorSpec& spec);

// Random unsound proof-graph: a sound graph damaged by one of four
// mutations (a conclusion join inside one component, a contraction bridging
// a fresh component, an implication discharging a hypothesis nothing uses,
// a contraction premise rewired to a free equal-labelled node), retried and
// verified until is_ngraph rejects it. Structurally always a proof-graph.
ProofGraph generate_unsound(const GeneratorSpec& spec);

} // namespace ngraph
