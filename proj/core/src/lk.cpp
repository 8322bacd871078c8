#include "ngraph/lk.hpp"

#include <algorithm>
#include <map>

namespace ngraph {

std::string to_string(LKRule r) {
  switch (r) {
  case LKRule::Axiom: return "Axiom";
  case LKRule::TopR: return "TopR";
  case LKRule::BotL: return "BotL";
  case LKRule::LW: return "LW";
  case LKRule::RW: return "RW";
  case LKRule::LC: return "LC";
  case LKRule::RC: return "RC";
  case LKRule::AndL1: return "AndL1";
  case LKRule::AndL2: return "AndL2";
  case LKRule::AndR: return "AndR";
  case LKRule::OrR1: return "OrR1";
  case LKRule::OrR2: return "OrR2";
  case LKRule::OrL: return "OrL";
  case LKRule::ImpL: return "ImpL";
  case LKRule::ImpR: return "ImpR";
  case LKRule::NegL: return "NegL";
  case LKRule::NegR: return "NegR";
  case LKRule::Cut: return "Cut";
  }
  return "?";
}

std::optional<LKRule> lk_rule_from_string(const std::string& name) {
  static const std::map<std::string, LKRule> table = {
      {"Axiom", LKRule::Axiom}, {"TopR", LKRule::TopR}, {"BotL", LKRule::BotL},
      {"LW", LKRule::LW},       {"RW", LKRule::RW},     {"LC", LKRule::LC},
      {"RC", LKRule::RC},       {"AndL1", LKRule::AndL1}, {"AndL2", LKRule::AndL2},
      {"AndR", LKRule::AndR},   {"OrR1", LKRule::OrR1}, {"OrR2", LKRule::OrR2},
      {"OrL", LKRule::OrL},     {"ImpL", LKRule::ImpL}, {"ImpR", LKRule::ImpR},
      {"NegL", LKRule::NegL},   {"NegR", LKRule::NegR}, {"Cut", LKRule::Cut},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

using Formulas = std::vector<Formula>;

// Erase one occurrence; false if absent.
bool remove_one(Formulas& v, const Formula& f) {
  auto it = std::find(v.begin(), v.end(), f);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

Formulas sorted(Formulas v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool same_multiset(const Formulas& a, const Formulas& b) {
  return a.size() == b.size() && sorted(a) == sorted(b);
}

bool same_union(const Formulas& whole, const Formulas& part1, const Formulas& part2) {
  if (whole.size() != part1.size() + part2.size()) return false;
  Formulas joined = part1;
  joined.insert(joined.end(), part2.begin(), part2.end());
  return sorted(joined) == sorted(whole);
}

// Candidates for principal-formula search: distinct formulas in a multiset.
Formulas distinct(const Formulas& v) {
  Formulas out = sorted(v);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// One-premise inference where the conclusion replaces `from` (a formula of
// one side of the premise) by `to`: generic engine for AndL1/AndL2, OrR1/
// OrR2, NegL/NegR, ImpR and the weakening/contraction family.
bool check_unary(const Sequent& premise, const Sequent& conclusion, bool changed_side_left,
                 const Formulas& removed_from_premise, const Formulas& added_to_conclusion,
                 bool other_side_moved, const Formulas& removed_other,
                 const Formulas& added_other) {
  Formulas p_changed = changed_side_left ? premise.antecedent : premise.succedent;
  Formulas c_changed = changed_side_left ? conclusion.antecedent : conclusion.succedent;
  for (const auto& f : removed_from_premise)
    if (!remove_one(p_changed, f)) return false;
  for (const auto& f : added_to_conclusion)
    if (!remove_one(c_changed, f)) return false;
  if (!same_multiset(p_changed, c_changed)) return false;

  Formulas p_other = changed_side_left ? premise.succedent : premise.antecedent;
  Formulas c_other = changed_side_left ? conclusion.succedent : conclusion.antecedent;
  if (other_side_moved) {
    for (const auto& f : removed_other)
      if (!remove_one(p_other, f)) return false;
    for (const auto& f : added_other)
      if (!remove_one(c_other, f)) return false;
  }
  return same_multiset(p_other, c_other);
}

bool rule_holds(const LKDerivation& d, std::string& why) {
  const Sequent& c = d.conclusion;
  size_t want = 0;
  switch (d.rule) {
  case LKRule::Axiom: case LKRule::TopR: case LKRule::BotL: want = 0; break;
  case LKRule::AndR: case LKRule::OrL: case LKRule::ImpL: case LKRule::Cut: want = 2; break;
  default: want = 1; break;
  }
  if (d.premises.size() != want) {
    why = "expected " + std::to_string(want) + " premises, found " +
          std::to_string(d.premises.size());
    return false;
  }

  auto fail = [&](const std::string& msg) {
    why = msg;
    return false;
  };

  switch (d.rule) {
  case LKRule::Axiom:
    if (c.antecedent.size() == 1 && c.succedent.size() == 1 &&
        c.antecedent[0] == c.succedent[0])
      return true;
    return fail("axiom conclusion must be A |- A");
  case LKRule::TopR:
    for (const auto& f : c.succedent)
      if (f.kind() == Formula::Kind::Top) return true;
    return fail("succedent must contain T");
  case LKRule::BotL:
    for (const auto& f : c.antecedent)
      if (f.kind() == Formula::Kind::Bottom) return true;
    return fail("antecedent must contain F");

  case LKRule::LW:
    for (const auto& f : distinct(c.antecedent))
      if (check_unary(d.premises[0].conclusion, c, true, {}, {f}, false, {}, {})) return true;
    return fail("conclusion is not the premise plus one antecedent formula");
  case LKRule::RW:
    for (const auto& f : distinct(c.succedent))
      if (check_unary(d.premises[0].conclusion, c, false, {}, {f}, false, {}, {})) return true;
    return fail("conclusion is not the premise plus one succedent formula");
  case LKRule::LC:
    for (const auto& f : distinct(c.antecedent))
      if (check_unary(d.premises[0].conclusion, c, true, {f, f}, {f}, false, {}, {}))
        return true;
    return fail("premise does not duplicate a contracted antecedent formula");
  case LKRule::RC:
    for (const auto& f : distinct(c.succedent))
      if (check_unary(d.premises[0].conclusion, c, false, {f, f}, {f}, false, {}, {}))
        return true;
    return fail("premise does not duplicate a contracted succedent formula");

  case LKRule::AndL1:
    for (const auto& f : distinct(c.antecedent))
      if (f.kind() == Formula::Kind::And &&
          check_unary(d.premises[0].conclusion, c, true, {f.left()}, {f}, false, {}, {}))
        return true;
    return fail("no antecedent conjunction matches the premise");
  case LKRule::AndL2:
    for (const auto& f : distinct(c.antecedent))
      if (f.kind() == Formula::Kind::And &&
          check_unary(d.premises[0].conclusion, c, true, {f.right()}, {f}, false, {}, {}))
        return true;
    return fail("no antecedent conjunction matches the premise");
  case LKRule::OrR1:
    for (const auto& f : distinct(c.succedent))
      if (f.kind() == Formula::Kind::Or &&
          check_unary(d.premises[0].conclusion, c, false, {f.left()}, {f}, false, {}, {}))
        return true;
    return fail("no succedent disjunction matches the premise");
  case LKRule::OrR2:
    for (const auto& f : distinct(c.succedent))
      if (f.kind() == Formula::Kind::Or &&
          check_unary(d.premises[0].conclusion, c, false, {f.right()}, {f}, false, {}, {}))
        return true;
    return fail("no succedent disjunction matches the premise");

  case LKRule::NegL:
    // from Gamma |- Delta, A infer ~A, Gamma |- Delta
    for (const auto& f : distinct(c.antecedent))
      if (f.kind() == Formula::Kind::Neg &&
          check_unary(d.premises[0].conclusion, c, true, {}, {f}, true, {f.left()}, {}))
        return true;
    return fail("no antecedent negation matches the premise");
  case LKRule::NegR:
    for (const auto& f : distinct(c.succedent))
      if (f.kind() == Formula::Kind::Neg &&
          check_unary(d.premises[0].conclusion, c, false, {}, {f}, true, {f.left()}, {}))
        return true;
    return fail("no succedent negation matches the premise");
  case LKRule::ImpR:
    // from A, Gamma |- Delta, B infer Gamma |- Delta, A -> B
    for (const auto& f : distinct(c.succedent))
      if (f.kind() == Formula::Kind::Imp &&
          check_unary(d.premises[0].conclusion, c, false, {f.right()}, {f}, true, {f.left()},
                      {}))
        return true;
    return fail("no succedent implication matches the premise");

  case LKRule::AndR: {
    const Sequent& p1 = d.premises[0].conclusion;
    const Sequent& p2 = d.premises[1].conclusion;
    for (const auto& f : distinct(c.succedent)) {
      if (f.kind() != Formula::Kind::And) continue;
      Formulas s1 = p1.succedent, s2 = p2.succedent, cs = c.succedent;
      if (!remove_one(s1, f.left()) || !remove_one(s2, f.right()) || !remove_one(cs, f))
        continue;
      if (same_union(c.antecedent, p1.antecedent, p2.antecedent) && same_union(cs, s1, s2))
        return true;
    }
    return fail("conclusion does not combine the premises under a succedent conjunction");
  }
  case LKRule::OrL: {
    const Sequent& p1 = d.premises[0].conclusion;
    const Sequent& p2 = d.premises[1].conclusion;
    for (const auto& f : distinct(c.antecedent)) {
      if (f.kind() != Formula::Kind::Or) continue;
      Formulas a1 = p1.antecedent, a2 = p2.antecedent, ca = c.antecedent;
      if (!remove_one(a1, f.left()) || !remove_one(a2, f.right()) || !remove_one(ca, f))
        continue;
      if (same_union(ca, a1, a2) && same_union(c.succedent, p1.succedent, p2.succedent))
        return true;
    }
    return fail("conclusion does not combine the premises under an antecedent disjunction");
  }
  case LKRule::ImpL: {
    // from Gamma1 |- Delta1, A and B, Gamma2 |- Delta2
    // infer A -> B, Gamma1, Gamma2 |- Delta1, Delta2
    const Sequent& p1 = d.premises[0].conclusion;
    const Sequent& p2 = d.premises[1].conclusion;
    for (const auto& f : distinct(c.antecedent)) {
      if (f.kind() != Formula::Kind::Imp) continue;
      Formulas s1 = p1.succedent, a2 = p2.antecedent, ca = c.antecedent;
      if (!remove_one(s1, f.left()) || !remove_one(a2, f.right()) || !remove_one(ca, f))
        continue;
      if (same_union(ca, p1.antecedent, a2) && same_union(c.succedent, s1, p2.succedent))
        return true;
    }
    return fail("conclusion does not combine the premises under an antecedent implication");
  }
  case LKRule::Cut: {
    const Sequent& p1 = d.premises[0].conclusion;
    const Sequent& p2 = d.premises[1].conclusion;
    for (const auto& f : distinct(p1.succedent)) {
      Formulas s1 = p1.succedent, a2 = p2.antecedent;
      if (!remove_one(s1, f) || !remove_one(a2, f)) continue;
      if (same_union(c.antecedent, p1.antecedent, a2) &&
          same_union(c.succedent, s1, p2.succedent))
        return true;
    }
    return fail("no cut formula joins the premises into the conclusion");
  }
  }
  return fail("unknown rule");
}

bool check_rec(const LKDerivation& d, LkVerdict& verdict, std::vector<int>& path) {
  std::string why;
  if (!rule_holds(d, why)) {
    verdict.sound = false;
    verdict.error = to_string(d.rule) + ": " + why;
    verdict.path = path;
    return false;
  }
  for (size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (!check_rec(d.premises[i], verdict, path)) return false;
    path.pop_back();
  }
  return true;
}

} // namespace

LkVerdict lk_check(const LKDerivation& d) {
  LkVerdict verdict;
  std::vector<int> path;
  if (check_rec(d, verdict, path)) verdict.sound = true;
  return verdict;
}

namespace {

void render(const LKDerivation& d, int depth, std::string& out) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  out += to_string(d.rule);
  if (d.principal) out += " [" + d.principal->to_string() + "]";
  out += ": " + d.conclusion.to_string() + "\n";
  for (const auto& p : d.premises) render(p, depth + 1, out);
}

} // namespace

std::string to_text(const LKDerivation& d) {
  std::string out;
  render(d, 0, out);
  return out;
}

} // namespace ngraph
