#include "fixtures.hpp"

using namespace ngraph;

namespace fixtures {
namespace {

Node n(const char* id, const char* text) { return Node{id, parse_formula(text)}; }

} // namespace

ProofGraph cyclic_diamond() {
  return ProofGraph({n("or", "A|B"), n("a", "A"), n("b", "B"), n("and", "A&B")},
                    {{LinkKind::OrE, {"or"}, {"a", "b"}, {}},
                     {LinkKind::AndI, {"a", "b"}, {"and"}, {}}});
}

ProofGraph contraction_merge() {
  return ProofGraph({n("p", "A|A"), n("a1", "A"), n("a2", "A"), n("a3", "A")},
                    {{LinkKind::OrE, {"p"}, {"a1", "a2"}, {}},
                     {LinkKind::Contraction, {"a1", "a2"}, {"a3"}, {}}});
}

ProofGraph expansion_fork() {
  return ProofGraph({n("p", "A"), n("a1", "A"), n("a2", "A"), n("c", "A&A")},
                    {{LinkKind::Expansion, {"p"}, {"a1", "a2"}, {}},
                     {LinkKind::AndI, {"a1", "a2"}, {"c"}, {}}});
}

ProofGraph discharge_case_split() {
  return ProofGraph({n("h", "A|B"), n("a", "A"), n("b", "B"), n("m", "(A|B)->A")},
                    {{LinkKind::OrE, {"h"}, {"a", "b"}, {}},
                     {LinkKind::ImpI, {"a"}, {"m"}, NodeId("h")}});
}

ProofGraph circular_discharge() {
  return ProofGraph({n("h", "A"), n("m", "A->(A|B)"), n("z", "A|B"), n("x", "A"),
                     n("y", "B"), n("p", "A|B"), n("q", "A|B")},
                    {{LinkKind::ImpE, {"h", "m"}, {"z"}, {}},
                     {LinkKind::OrE, {"z"}, {"x", "y"}, {}},
                     {LinkKind::OrIL, {"x"}, {"p"}, {}},
                     {LinkKind::ImpI, {"p"}, {"m"}, NodeId("h")},
                     {LinkKind::OrIR, {"y"}, {"q"}, {}}});
}

ProofGraph contract_then_widen() {
  return ProofGraph({n("r", "A|A"), n("a1", "A"), n("a2", "A"), n("a3", "A"), n("t", "A|C")},
                    {{LinkKind::OrE, {"r"}, {"a1", "a2"}, {}},
                     {LinkKind::Contraction, {"a1", "a2"}, {"a3"}, {}},
                     {LinkKind::OrIL, {"a3"}, {"t"}, {}}});
}

ProofGraph empire_showcase() {
  return ProofGraph(
      {n("p1", "(~A&Z)|B"), n("p2", "A|C"), n("n1", "~A&Z"), n("n2", "~A&Z"),
       n("n3", "~A&Z"), n("b1", "B"), n("na", "~A"), n("z1", "Z"), n("a1", "A"),
       n("c1", "C"), n("bot", "F"), n("cz", "C&Z")},
      {{LinkKind::OrE, {"p1"}, {"n1", "b1"}, {}},
       {LinkKind::Expansion, {"n1"}, {"n2", "n3"}, {}},
       {LinkKind::AndEL, {"n2"}, {"na"}, {}},
       {LinkKind::AndER, {"n3"}, {"z1"}, {}},
       {LinkKind::OrE, {"p2"}, {"a1", "c1"}, {}},
       {LinkKind::BotLink, {"a1", "na"}, {"bot"}, {}},
       {LinkKind::AndI, {"c1", "z1"}, {"cz"}, {}}});
}

ProofGraph chain_two_links() {
  return ProofGraph({n("p", "A&B"), n("a", "A"), n("t", "A|C")},
                    {{LinkKind::AndEL, {"p"}, {"a"}, {}},
                     {LinkKind::OrIL, {"a"}, {"t"}, {}}});
}

} // namespace fixtures
