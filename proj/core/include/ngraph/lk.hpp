#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngraph/sequent.hpp"

namespace ngraph {

// Classical sequent calculus with multiset contexts and no exchange rule.
// Two-premise rules split their contexts (multiplicative form); TopR and
// BotL are axiom schemas admitting arbitrary side formulas.
enum class LKRule {
  Axiom, // A |- A
  TopR,  // Gamma |- Delta, T
  BotL,  // F, Gamma |- Delta
  LW, RW, LC, RC,
  AndL1, AndL2, AndR,
  OrR1, OrR2, OrL,
  ImpL, ImpR,
  NegL, NegR,
  Cut,
};

std::string to_string(LKRule r);
std::optional<LKRule> lk_rule_from_string(const std::string& name);

struct LKDerivation {
  LKRule rule;
  Sequent conclusion;
  // Principal (or cut) formula, kept for readable printing. The checker
  // never relies on it: derivations read back from files lack it.
  std::optional<Formula> principal;
  std::vector<LKDerivation> premises;
};

inline const Sequent& end_sequent_of(const LKDerivation& d) { return d.conclusion; }

struct LkVerdict {
  bool sound = false;
  std::string error;      // empty when sound
  std::vector<int> path;  // child indices from the root to the offending node
};

// Validates every node against its rule schema, inferring principal/cut
// formulas by search over the conclusion's multisets. Deterministic and
// independent of how the derivation was produced.
LkVerdict lk_check(const LKDerivation& d);

// Indented tree rendering, one "rule: sequent" line per node.
std::string to_text(const LKDerivation& d);

} // namespace ngraph
