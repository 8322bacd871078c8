#pragma once

#include <string>

#include "ngraph/empires.hpp"
#include "ngraph/lk.hpp"
#include "ngraph/proof_graph.hpp"
#include "ngraph/split.hpp"
#include "ngraph/switching.hpp"

namespace ngraph {

// Graphviz renderings. Solid edges are drawn solid, except that the edges of
// contraction and expansion links are dotted to flag where switchings choose;
// meta edges are dashed and labelled "m".
std::string graph_to_dot(const ProofGraph& g);

// One meta-switching: kept edges solid (the virtual edge bold, labelled
// "v"), dropped edges of switchable links gray.
std::string switching_to_dot(const ProofGraph& g, const MetaSwitching& s);

// Members filled green, the root gold.
std::string empire_to_dot(const ProofGraph& g, const Empire& e);

// North and south as clusters around the gold split node.
std::string split_to_dot(const ProofGraph& g, const SplitResult& r);

// The derivation tree, root on top, one "rule / sequent" box per step.
std::string derivation_to_dot(const LKDerivation& d);

} // namespace ngraph
