#include "ngraph/sequent.hpp"

#include <algorithm>

namespace ngraph {

std::string Sequent::to_string() const {
  std::string out;
  for (size_t i = 0; i < antecedent.size(); ++i) {
    if (i) out += ", ";
    out += antecedent[i].to_string();
  }
  out += antecedent.empty() ? "|-" : " |-";
  for (size_t i = 0; i < succedent.size(); ++i) {
    out += i ? ", " : " ";
    out += succedent[i].to_string();
  }
  return out;
}

bool multiset_equal(std::vector<Formula> a, std::vector<Formula> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  return multiset_equal(a.antecedent, b.antecedent) &&
         multiset_equal(a.succedent, b.succedent);
}

} // namespace ngraph
