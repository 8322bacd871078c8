#pragma once

#include <string>

#include "ngraph/lk.hpp"
#include "ngraph/proof_graph.hpp"

namespace ngraph {

// Graph wire format:
//   {"nodes": [{"id": "n0", "formula": "a&b"}, ...],
//    "links": [{"kind": "AndEL", "premises": ["n0"], "conclusions": ["n1"]},
//              {"kind": "ImpI", ..., "hypothesis": "n2"}, ...]}
// Formulas travel as text in the parser's grammar. Readers throw ParseError
// on malformed JSON or formula text and StructuralError on wrong shape,
// unknown kinds, or graphs that fail validation.
std::string graph_to_json(const ProofGraph& g);
ProofGraph graph_from_json(const std::string& text);

// Derivation wire format, recursively:
//   {"rule": "OrL",
//    "conclusion": {"antecedent": ["a|b"], "succedent": ["a", "b"]},
//    "premises": [...]}
std::string derivation_to_json(const LKDerivation& d);
LKDerivation derivation_from_json(const std::string& text);

} // namespace ngraph
