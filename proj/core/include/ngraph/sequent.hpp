#pragma once

#include <string>
#include <vector>

#include "ngraph/formula.hpp"

namespace ngraph {

// Two-sided sequent with multiset semantics: order in the vectors is
// presentation only, equality is multiset equality per side.
struct Sequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;

  std::string to_string() const;
};

bool multiset_equal(std::vector<Formula> a, std::vector<Formula> b);
bool sequent_equal(const Sequent& a, const Sequent& b);

} // namespace ngraph
