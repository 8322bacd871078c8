#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "ngraph/errors.hpp"
#include "ngraph/proof_graph.hpp"

using namespace ngraph;

namespace {

Node n(const char* id, const char* text) { return Node{id, parse_formula(text)}; }

bool has_violation(const std::vector<Node>& nodes, const std::vector<Link>& links,
                   StructuralViolation::Kind kind) {
  for (const auto& v : validate(nodes, links))
    if (v.kind == kind) return true;
  return false;
}

} // namespace

TEST_CASE("fixtures validate cleanly") {
  CHECK(fixtures::cyclic_diamond().link_count() == 2);
  CHECK(fixtures::contraction_merge().link_count() == 2);
  CHECK(fixtures::expansion_fork().link_count() == 2);
  CHECK(fixtures::discharge_case_split().link_count() == 2);
  CHECK(fixtures::circular_discharge().link_count() == 5);
  CHECK(fixtures::contract_then_widen().link_count() == 3);
  CHECK(fixtures::empire_showcase().link_count() == 7);
  CHECK(fixtures::chain_two_links().link_count() == 2);
}

TEST_CASE("validate reports duplicate and unknown ids") {
  CHECK(has_violation({n("x", "a"), n("x", "b")}, {},
                      StructuralViolation::Kind::DuplicateNodeId));
  CHECK(has_violation({n("x", "a&b"), n("y", "a")},
                      {{LinkKind::AndEL, {"zz"}, {"y"}, {}}},
                      StructuralViolation::Kind::UnknownNodeId));
}

TEST_CASE("validate reports arity violations") {
  CHECK(has_violation({n("x", "a"), n("y", "a&b")},
                      {{LinkKind::AndI, {"x"}, {"y"}, {}}},
                      StructuralViolation::Kind::BadArity));
  CHECK(has_violation({n("x", "a"), n("y", "b->a")},
                      {{LinkKind::ImpI, {"x"}, {"y"}, {}}},
                      StructuralViolation::Kind::BadArity));
  CHECK(has_violation({n("x", "a|b"), n("y", "a")},
                      {{LinkKind::OrE, {"x"}, {"y"}, {}}},
                      StructuralViolation::Kind::BadArity));
}

TEST_CASE("validate reports schema mismatches") {
  // AndEL wants a conjunction premise and its left conjunct below.
  CHECK(has_violation({n("x", "a|b"), n("y", "a")},
                      {{LinkKind::AndEL, {"x"}, {"y"}, {}}},
                      StructuralViolation::Kind::SchemaMismatch));
  CHECK(has_violation({n("x", "a&b"), n("y", "b")},
                      {{LinkKind::AndEL, {"x"}, {"y"}, {}}},
                      StructuralViolation::Kind::SchemaMismatch));
  CHECK(has_violation({n("x", "a"), n("y", "a"), n("z", "a")},
                      {{LinkKind::BotLink, {"x", "y"}, {"z"}, {}}},
                      StructuralViolation::Kind::SchemaMismatch));
  CHECK(has_violation({n("x", "a"), n("y", "b"), n("z", "a")},
                      {{LinkKind::Contraction, {"x", "y"}, {"z"}, {}}},
                      StructuralViolation::Kind::SchemaMismatch));
  CHECK(has_violation({n("h", "a"), n("y", "b"), n("m", "b->a")},
                      {{LinkKind::ImpI, {"y"}, {"m"}, NodeId("h")}},
                      StructuralViolation::Kind::SchemaMismatch));
}

TEST_CASE("validate reports double role use") {
  // x feeds two links.
  CHECK(has_violation({n("x", "a"), n("y", "a|b"), n("z", "a|c")},
                      {{LinkKind::OrIL, {"x"}, {"y"}, {}},
                       {LinkKind::OrIL, {"x"}, {"z"}, {}}},
                      StructuralViolation::Kind::DoubleUsePremise));
  // y concluded twice.
  CHECK(has_violation({n("x", "a&b"), n("x2", "b&a"), n("y", "a")},
                      {{LinkKind::AndEL, {"x"}, {"y"}, {}},
                       {LinkKind::AndER, {"x2"}, {"y"}, {}}},
                      StructuralViolation::Kind::DoubleUseConclusion));
  // The hypothesis slot counts as a concluding position.
  CHECK(has_violation({n("p", "a&b"), n("h", "a"), n("y", "b"), n("m", "a->b")},
                      {{LinkKind::AndEL, {"p"}, {"h"}, {}},
                       {LinkKind::ImpI, {"y"}, {"m"}, NodeId("h")}},
                      StructuralViolation::Kind::DoubleUseConclusion));
}

TEST_CASE("constructor throws on the first violation") {
  CHECK_THROWS_AS(ProofGraph({n("x", "a"), n("x", "b")}, {}), StructuralError);
  try {
    ProofGraph({n("x", "a|b"), n("y", "a")},
               {{LinkKind::AndEL, {"x"}, {"y"}, {}}});
    CHECK(false);
  } catch (const StructuralError& e) {
    CHECK(e.subject() == "link #0 (AndEL)");
  }
}

TEST_CASE("self-discharge is a legal proof-graph") {
  ProofGraph g({n("a", "A"), n("m", "A->A")},
               {{LinkKind::ImpI, {"a"}, {"m"}, NodeId("a")}});
  CHECK(g.premises().empty());
  CHECK(g.hypotheses().to_indices() == std::vector<int>{g.node_index("a")});
  CHECK(g.conclusions().to_indices() == std::vector<int>{g.node_index("m")});
  CHECK(g.end_sequent().to_string() == "|- A -> A");
}

TEST_CASE("node classification and end sequent") {
  ProofGraph g = fixtures::discharge_case_split();
  CHECK(g.premises().empty());
  NodeSet conc = g.conclusions();
  CHECK(conc.count() == 2);
  CHECK(conc.contains(g.node_index("b")));
  CHECK(conc.contains(g.node_index("m")));
  CHECK(g.hypotheses().to_indices() == std::vector<int>{g.node_index("h")});

  Sequent s = g.end_sequent();
  CHECK(s.antecedent.empty());
  CHECK(sequent_equal(s, Sequent{{}, {parse_formula("(A|B)->A"), parse_formula("B")}}));

  CHECK(fixtures::contract_then_widen().end_sequent().to_string() == "A | A |- A | C");
}

TEST_CASE("links per role are tracked") {
  ProofGraph g = fixtures::discharge_case_split();
  CHECK(g.link_using(g.node_index("h")) == 0);
  CHECK(g.link_concluding(g.node_index("h")) == 1); // the hypothesis slot
  CHECK(g.link_concluding(g.node_index("m")) == 1);
  CHECK(g.link_using(g.node_index("m")) == -1);
  CHECK(g.link_concluding(g.node_index("a")) == 0);
}

TEST_CASE("edges carry link indices and meta flags") {
  ProofGraph g = fixtures::discharge_case_split();
  int solid = 0, meta = 0;
  for (const auto& e : g.edges()) (e.meta ? meta : solid)++;
  CHECK(solid == 3); // h->a, h->b, a->m
  CHECK(meta == 1);  // a's link discharging h
  for (const auto& e : g.edges())
    if (e.meta) {
      CHECK(e.from == g.node_index("a"));
      CHECK(e.to == g.node_index("h"));
      CHECK(e.link == 1);
    }
}

TEST_CASE("induced keeps exactly the wholly contained links") {
  ProofGraph g = fixtures::contract_then_widen();
  NodeSet s(g.node_count());
  for (const char* id : {"r", "a1", "a2", "a3"}) s.insert(g.node_index(id));
  ProofGraph sub = g.induced(s);
  CHECK(sub.node_count() == 4);
  CHECK(sub.link_count() == 2);
  CHECK(sub.end_sequent().to_string() == "A | A |- A");

  s.erase(g.node_index("a2"));
  ProofGraph sub2 = g.induced(s);
  CHECK(sub2.link_count() == 0); // contraction needs a2, OrE needs it too
  CHECK(sub2.node_count() == 3);

  // An ImpI link needs its hypothesis inside as well.
  ProofGraph d = fixtures::discharge_case_split();
  NodeSet t(d.node_count());
  t.insert(d.node_index("a"));
  t.insert(d.node_index("m"));
  CHECK(d.induced(t).link_count() == 0);
}

TEST_CASE("node_index rejects unknown ids") {
  CHECK_THROWS_AS(fixtures::chain_two_links().node_index("nope"), StructuralError);
}
