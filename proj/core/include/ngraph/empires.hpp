#pragma once

#include "ngraph/node_set.hpp"
#include "ngraph/proof_graph.hpp"
#include "ngraph/switching.hpp"

namespace ngraph {

enum class Side { North, South, Whole };

std::string to_string(Side s);

// North/south/whole empire of a root occurrence: the largest sub-N-Graph
// with the root as lower door (North), upper door (South), or their union
// (Whole). members holds node indices of the graph the empire was computed
// from.
struct Empire {
  NodeId root;
  Side side;
  NodeSet members;

  std::vector<NodeId> member_ids(const ProofGraph& g) const;
};

// Component of a in the switching graph after cutting a loose: for North,
// delete the kept edges leaving a downward (a virtual edge leaves its
// hypothesis downward toward the ImpI main conclusion); for South, delete
// the kept edges entering a. If no edge is deleted the component is the
// whole vertex set by convention. Side must be North or South.
NodeSet s_component(const ProofGraph& g, const std::vector<SwitchEdge>& edges, int a, Side side);
NodeSet s_component(const ProofGraph& g, const MetaSwitching& s, int a, Side side);

// Production empire computation: worklist fixpoint of the closure rules.
// Polynomial; defined for sound graphs. Whole delegates to whole_empire_set.
NodeSet empire_closure_set(const ProofGraph& g, int a, Side side);
Empire empire_closure(const ProofGraph& g, const NodeId& a, Side side);

// Test oracle: intersection of s_component over every meta-switching.
// Exponential; guarded by the resource limit.
NodeSet empire_by_intersection(const ProofGraph& g, int a, Side side,
                               const ResourceLimit& limit = {});

// A switching whose s-component at a is exactly the empire: boundary
// contractions/expansions/ImpI keep the edge avoiding the member side, and
// links touching a itself keep the edge that the s-component cut removes
// (upper slots for North, lower slots for South). Everything else Left.
MetaSwitching principal_switching(const ProofGraph& g, int a, Side side, const NodeSet& members);
MetaSwitching principal_switching(const ProofGraph& g, const NodeId& a, Side side);

// whole = north union south.
NodeSet whole_empire_set(const ProofGraph& g, int a);
Empire whole_empire(const ProofGraph& g, const NodeId& a);

// The sub-proof-graph induced by the empire's members.
ProofGraph empire_subgraph(const ProofGraph& g, const Empire& e);

} // namespace ngraph
