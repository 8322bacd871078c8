#pragma once

#include "ngraph/empires.hpp"
#include "ngraph/proof_graph.hpp"

namespace ngraph {

// Domain of the occurrence ordering: internal nodes, i.e. neither premises
// nor conclusions of the graph. Used hypotheses are internal.
std::vector<int> order_domain(const ProofGraph& g);

// The strict ordering on internal occurrences: a comes before b iff a's
// whole empire is a proper subset of b's. Throws DomainError when either
// argument is a premise or conclusion of the graph.
bool order_lt(const ProofGraph& g, const NodeId& a, const NodeId& b);

struct SplitResult {
  NodeId node;
  Empire north;
  Empire south;
};

// Split-node selection for the cut case of sequentialization: among internal
// non-hypothesis nodes, take the candidates maximal under the ordering
// (smallest NodeId first) and return the first whose whole empire spans the
// graph and whose two empires partition the links around exactly the shared
// node, each side a strictly smaller sound subgraph.
//
// Hypotheses are skipped as candidates: a used hypothesis has south empire
// equal to the whole graph and north empire {itself}, so it can never
// satisfy the both-sides-nonempty postcondition.
//
// Throws PreconditionError while a reducible configuration exists (initial
// expansion, final contraction, or final ImpI link) or with fewer than two
// links; throws SequentializeError if no candidate passes (not expected on
// sound inputs). Side soundness is rechecked via is_ngraph when the side is
// within the resource limit.
SplitResult find_split(const ProofGraph& g, const ResourceLimit& limit = {});

} // namespace ngraph
