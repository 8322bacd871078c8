#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngraph/formula.hpp"
#include "ngraph/node_set.hpp"
#include "ngraph/sequent.hpp"

namespace ngraph {

using NodeId = std::string;

// The sixteen link kinds. Simple links are 1 premise => 1 conclusion,
// focussing 2 => 1, defocussing 1 => 2. ImpI is defocussing with its second
// "conclusion" being the discharged hypothesis, reached by a meta edge.
enum class LinkKind {
  AndEL,       // A&B => A
  AndER,       // A&B => B
  OrIL,        // A => A|B
  OrIR,        // B => A|B
  TopSW,       // A => T
  BotSW,       // F => A
  AndI,        // A, B => A&B
  BotLink,     // A, ~A => F
  ImpE,        // A, A->B => B
  TopFW,       // T, A => A
  Contraction, // A, A => A
  OrE,         // A|B => A, B
  TopLink,     // T => A, ~A
  BotDW,       // A => A, F
  Expansion,   // A => A, A
  ImpI,        // B => A->B, discharging hypothesis A
};

enum class LinkShape { Simple, Focussing, Defocussing };

// Empire closure treats links by this classification, which cuts across the
// shapes: contraction is focussing yet disjunctive, expansion defocussing yet
// conjunctive.
enum class Polarity { None, Conjunctive, Disjunctive };

LinkShape shape_of(LinkKind k);
Polarity polarity_of(LinkKind k);
bool is_switchable(LinkKind k); // Contraction, Expansion, ImpI
std::string to_string(LinkKind k);
std::optional<LinkKind> link_kind_from_string(const std::string& name);

struct Node {
  NodeId id;
  Formula label;
};

struct Link {
  LinkKind kind;
  std::vector<NodeId> premises;
  std::vector<NodeId> conclusions;
  std::optional<NodeId> hypothesis; // present iff kind == ImpI
};

struct StructuralViolation {
  enum class Kind {
    DuplicateNodeId,
    UnknownNodeId,
    BadArity,
    SchemaMismatch,
    DoubleUsePremise,
    DoubleUseConclusion,
  };
  Kind kind;
  std::string subject; // offending node id or "link #k"
  std::string message;
};

// All schema and sharing violations, empty iff the data forms a proof-graph.
std::vector<StructuralViolation> validate(const std::vector<Node>& nodes,
                                          const std::vector<Link>& links);

// Immutable proof-graph. The constructor runs validate() and throws
// StructuralError on the first violation, so every live ProofGraph is
// schema-correct and its derived edge sets can be trusted.
class ProofGraph {
public:
  ProofGraph(std::vector<Node> nodes, std::vector<Link> links);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }

  int node_index(const NodeId& id) const; // throws StructuralError if unknown
  const Node& node(int i) const { return nodes_[i]; }
  const Formula& label(int i) const { return nodes_[i].label; }

  // Links with node ids resolved to indices. hypothesis is -1 except ImpI.
  struct LinkView {
    LinkKind kind;
    std::vector<int> premises;
    std::vector<int> conclusions;
    int hypothesis = -1;
  };
  const std::vector<LinkView>& link_views() const { return views_; }

  // Directed edges: one solid edge per (premise, conclusion) pair of each
  // link, except ImpI which has one solid edge premise -> main conclusion
  // and one meta edge premise -> hypothesis.
  struct Edge {
    int from;
    int to;
    int link;
    bool meta;
  };
  const std::vector<Edge>& edges() const { return edges_; }

  // Node classes: premises have no incoming edges at all (solid or meta),
  // conclusions no outgoing edges, hypotheses no incoming solid edge and
  // exactly one incoming meta edge. A discharged hypothesis is never a
  // premise; if nothing uses it, it counts as a conclusion.
  const NodeSet& premises() const { return premises_; }
  const NodeSet& conclusions() const { return conclusions_; }
  const NodeSet& hypotheses() const { return hypotheses_; }

  // premises() |- conclusions(), each side ordered by node id.
  Sequent end_sequent() const;

  // The link using the node as a premise / concluding it (the hypothesis slot
  // counts as a concluding position). -1 when there is none. Well defined
  // because each role is held at most once.
  int link_using(int node) const { return used_by_[node]; }
  int link_concluding(int node) const { return concluded_by_[node]; }

  // Subgraph on a node subset, keeping exactly the links all of whose
  // nodes (including any hypothesis) are members.
  ProofGraph induced(const NodeSet& members) const;

private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<LinkView> views_;
  std::vector<Edge> edges_;
  std::vector<int> used_by_;
  std::vector<int> concluded_by_;
  NodeSet premises_, conclusions_, hypotheses_;
};

} // namespace ngraph
