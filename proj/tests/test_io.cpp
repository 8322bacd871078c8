#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "ngraph/dot.hpp"
#include "ngraph/errors.hpp"
#include "ngraph/json_io.hpp"
#include "ngraph/sequentialize.hpp"
#include "ngraph/split.hpp"

using namespace ngraph;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("graphs round trip through json") {
  for (const ProofGraph& g :
       {fixtures::cyclic_diamond(), fixtures::contraction_merge(),
        fixtures::expansion_fork(), fixtures::discharge_case_split(),
        fixtures::circular_discharge(), fixtures::contract_then_widen(),
        fixtures::empire_showcase(), fixtures::chain_two_links()}) {
    std::string text = graph_to_json(g);
    ProofGraph back = graph_from_json(text);
    CHECK(graph_to_json(back) == text);
    CHECK(back.node_count() == g.node_count());
    CHECK(back.link_count() == g.link_count());
    for (int i = 0; i < g.node_count(); ++i) {
      CHECK(back.node(i).id == g.node(i).id);
      CHECK(back.label(i) == g.label(i));
    }
  }
}

TEST_CASE("the hypothesis field travels with ImpI links") {
  std::string text = graph_to_json(fixtures::discharge_case_split());
  CHECK(contains(text, "\"hypothesis\": \"h\""));
  ProofGraph back = graph_from_json(text);
  CHECK(back.links()[1].hypothesis == NodeId("h"));
}

TEST_CASE("derivations round trip through json") {
  LKDerivation d = sequentialize(fixtures::contract_then_widen());
  std::string text = derivation_to_json(d);
  LKDerivation back = derivation_from_json(text);
  CHECK(lk_check(back).sound);
  CHECK(derivation_to_json(back) == text);
  CHECK(sequent_equal(back.conclusion, d.conclusion));
  // The principal formula is presentation only and does not travel.
  CHECK_FALSE(back.principal.has_value());
}

TEST_CASE("malformed json raises parse errors") {
  CHECK_THROWS_AS(graph_from_json("{"), ParseError);
  CHECK_THROWS_AS(graph_from_json(""), ParseError);
  CHECK_THROWS_AS(derivation_from_json("[1,2"), ParseError);
  // Well-formed json with a malformed formula inside.
  CHECK_THROWS_AS(
      graph_from_json(R"({"nodes":[{"id":"x","formula":"a&"}],"links":[]})"),
      ParseError);
}

TEST_CASE("wrong shapes raise structural errors") {
  CHECK_THROWS_AS(graph_from_json("[]"), StructuralError);
  CHECK_THROWS_AS(graph_from_json(R"({"nodes": 3, "links": []})"), StructuralError);
  CHECK_THROWS_AS(graph_from_json(R"({"links": []})"), StructuralError);
  CHECK_THROWS_AS(
      graph_from_json(
          R"({"nodes":[{"id":"x","formula":"a"}],"links":[{"kind":"Nope","premises":[],"conclusions":[]}]})"),
      StructuralError);
  CHECK_THROWS_AS(
      graph_from_json(
          R"({"nodes":[{"id":"x","formula":"a&b"}],"links":[{"kind":"AndEL","premises":["x"],"conclusions":["y"]}]})"),
      StructuralError);
  CHECK_THROWS_AS(derivation_from_json(R"({"rule":"Nope","conclusion":{"antecedent":[],"succedent":[]},"premises":[]})"),
                  StructuralError);
  CHECK_THROWS_AS(derivation_from_json(R"({"conclusion":{"antecedent":[],"succedent":[]}})"),
                  StructuralError);
}

TEST_CASE("graph dot output shows the switching structure") {
  std::string dot = graph_to_dot(fixtures::discharge_case_split());
  CHECK(contains(dot, "digraph"));
  CHECK(contains(dot, "label=\"m\"")); // the meta edge
  CHECK(contains(dot, "A | B -> A"));

  std::string cdot = graph_to_dot(fixtures::contract_then_widen());
  CHECK(contains(cdot, "style=dotted")); // contraction edges are choices
}

TEST_CASE("switching dot marks virtual and dropped edges") {
  ProofGraph g = fixtures::discharge_case_split();
  std::string dot = switching_to_dot(g, MetaSwitchingRange(g).at(1));
  CHECK(contains(dot, "label=\"v\""));
  CHECK(contains(dot, "style=dashed"));
}

TEST_CASE("empire and split dot renderings highlight their subjects") {
  ProofGraph g = fixtures::contract_then_widen();
  std::string edot = empire_to_dot(g, empire_closure(g, "a1", Side::North));
  CHECK(contains(edot, "gold"));
  CHECK(contains(edot, "palegreen"));

  std::string sdot = split_to_dot(g, find_split(g));
  CHECK(contains(sdot, "cluster_north"));
  CHECK(contains(sdot, "cluster_south"));

  std::string ddot = derivation_to_dot(sequentialize(g));
  CHECK(contains(ddot, "Cut"));
  CHECK(contains(ddot, "A | A |- A | C"));
}
