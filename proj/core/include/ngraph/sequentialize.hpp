#pragma once

#include <optional>
#include <string>

#include "ngraph/lk.hpp"
#include "ngraph/proof_graph.hpp"
#include "ngraph/switching.hpp"

namespace ngraph {

// Local derivation of one non-switchable link's sequent (premise labels |-
// conclusion labels), from the fixed per-kind table. Throws
// PreconditionError on Contraction/Expansion/ImpI, which have no local
// sequent reading.
LKDerivation single_link_derivation(const ProofGraph& g, int link_index);

struct SequentializeOptions {
  // Recheck intermediate graphs with is_ngraph: Auto skips graphs whose
  // switchable-link count exceeds the limit, Always insists (and may throw
  // ResourceLimitError), Never trusts the reduction steps.
  enum class Verify { Auto, Always, Never };
  Verify verify = Verify::Auto;
  ResourceLimit limit;

  // Rewrite T and F away from the emitted derivation using a witness atom
  // (smallest atom of the graph by default, or "a" if there is none).
  bool encode_units = false;
  std::optional<std::string> unit_witness;
};

// Translates a sound graph into a checked LK derivation whose end sequent
// equals the graph's, by induction on links: isolated node -> Axiom; one
// link -> the table; initial expansion -> recurse + LC; final contraction ->
// recurse + RC; final ImpI -> recurse + ImpR; otherwise cut at a split node
// and join the two empire derivations. Ties go to the lowest NodeId of the
// node being removed (the split node for the cut case); case order is as
// listed. Every returned subderivation's conclusion is asserted against the
// subgraph's end sequent; mismatches throw SequentializeError.
LKDerivation sequentialize(const ProofGraph& g, const SequentializeOptions& options = {});

// The unit-elimination post-pass behind --encode-units: maps every formula
// through encode_units(., witness) and re-derives the TopR/BotL leaves from
// axioms on the witness. Output checks under lk_check whenever the input
// does.
LKDerivation encode_units_derivation(const LKDerivation& d, const Formula& witness);

} // namespace ngraph
