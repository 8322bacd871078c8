#pragma once

#include "ngraph/proof_graph.hpp"

namespace fixtures {

// Small graphs reused across the suites, frozen by hand. Comments give the
// end sequent and the verdict where that is the point of the fixture.

// or(A|B) => a(A), b(B) by OrE; a, b => and(A&B) by AndI. Unsound: the
// diamond cycle survives every switching (there is none to make).
ngraph::ProofGraph cyclic_diamond();

// p(A|A) => a1, a2 by OrE; a1, a2 => a3 by contraction. Sound, A|A |- A.
ngraph::ProofGraph contraction_merge();

// p(A) => a1, a2 by expansion; a1, a2 => c(A&A) by AndI. Sound, A |- A&A.
ngraph::ProofGraph expansion_fork();

// h(A|B) => a(A), b(B) by OrE; ImpI discharges h from a into m((A|B)->A).
// Sound, |- (A|B)->A, B. No premises; h is a used hypothesis.
ngraph::ProofGraph discharge_case_split();

// ImpE of h(A) with m(A->(A|B)) gives z(A|B); OrE splits z into x(A), y(B);
// OrIL rebuilds p(A|B) from x; ImpI discharges h from p back into m, closing
// the loop; OrIR widens y to q(A|B). Unsound: both ImpI choices leave a
// cycle.
ngraph::ProofGraph circular_discharge();

// r(A|A) => a1, a2 by OrE; a1, a2 => a3 by contraction; a3 => t(A|C) by
// OrIL. Sound, A|A |- A|C. The canonical split example: split node a3.
ngraph::ProofGraph contract_then_widen();

// Twelve nodes around an expansion of ~A&Z. The empires of a1(A) separate
// the BotLink side from the AndI side, which makes the expansion boundary
// visible in both directions.
ngraph::ProofGraph empire_showcase();

// p(A&B) => a(A) by AndEL; a => t(A|C) by OrIL. Sound, two links, a the
// only internal node.
ngraph::ProofGraph chain_two_links();

} // namespace fixtures
