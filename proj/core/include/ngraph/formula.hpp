#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ngraph {

// Immutable propositional formula. Values are cheap to copy (one shared_ptr)
// and compare structurally, so they behave like ordinary value types in
// containers and multiset comparisons.
class Formula {
public:
  enum class Kind { Atom, Neg, And, Or, Imp, Top, Bottom };

  Formula() : Formula(top()) {}

  static Formula atom(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula top();
  static Formula bottom();

  Kind kind() const { return rep_->kind; }
  // Atom only.
  const std::string& name() const { return rep_->name; }
  // Neg/And/Or/Imp only. Neg stores its body in left().
  const Formula& left() const { return rep_->children[0]; }
  const Formula& right() const { return rep_->children[1]; }

  bool operator==(const Formula& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Formula& o) const { return compare(*this, o) != 0; }
  bool operator<(const Formula& o) const { return compare(*this, o) < 0; }

  // Total structural order: by kind, then name / children left to right.
  static int compare(const Formula& a, const Formula& b);

  // Minimal-parenthesis text. parse_formula(to_string(f)) == f.
  std::string to_string() const;

  // Atom names occurring in the formula, each once, sorted.
  void collect_atoms(std::vector<std::string>& out) const;

private:
  struct Rep {
    Kind kind;
    std::string name;            // Atom
    std::vector<Formula> children; // Neg: 1, And/Or/Imp: 2
  };
  explicit Formula(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Grammar, loosest to tightest:
//   imp  := or ('->' imp)?            right associative
//   or   := and ('|' and)*            left associative
//   and  := neg ('&' neg)*            left associative
//   neg  := '~' neg | atom | 'T' | 'F' | '(' imp ')'
//   atom := [a-zA-Z][a-zA-Z0-9_]*     except the exact names T and F
// Whitespace between tokens is ignored. Throws ParseError.
Formula parse_formula(std::string_view text);

// Unit-free encoding over witness atom w: T becomes w|~w, F becomes w&~w,
// applied recursively. Unit-free inputs with no units are returned as is.
Formula encode_units(const Formula& f, const Formula& witness);

} // namespace ngraph
