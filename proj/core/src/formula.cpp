#include "ngraph/formula.hpp"

#include <algorithm>
#include <cctype>

#include "ngraph/errors.hpp"

namespace ngraph {

Formula Formula::atom(std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Atom;
  rep->name = std::move(name);
  return Formula(std::move(rep));
}

Formula Formula::neg(Formula f) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Neg;
  rep->children = {std::move(f)};
  return Formula(std::move(rep));
}

Formula Formula::conj(Formula l, Formula r) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::And;
  rep->children = {std::move(l), std::move(r)};
  return Formula(std::move(rep));
}

Formula Formula::disj(Formula l, Formula r) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Or;
  rep->children = {std::move(l), std::move(r)};
  return Formula(std::move(rep));
}

Formula Formula::imp(Formula l, Formula r) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Imp;
  rep->children = {std::move(l), std::move(r)};
  return Formula(std::move(rep));
}

Formula Formula::top() {
  static const Formula t = [] {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::Top;
    return Formula(std::move(rep));
  }();
  return t;
}

Formula Formula::bottom() {
  static const Formula f = [] {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::Bottom;
    return Formula(std::move(rep));
  }();
  return f;
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.rep_ == b.rep_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
  case Kind::Top:
  case Kind::Bottom:
    return 0;
  case Kind::Atom:
    return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
  case Kind::Neg:
    return compare(a.left(), b.left());
  case Kind::And:
  case Kind::Or:
  case Kind::Imp: {
    int c = compare(a.left(), b.left());
    return c != 0 ? c : compare(a.right(), b.right());
  }
  }
  return 0;
}

// Printer precedence; higher binds tighter.
static int prec(Formula::Kind k) {
  switch (k) {
  case Formula::Kind::Imp: return 1;
  case Formula::Kind::Or: return 2;
  case Formula::Kind::And: return 3;
  case Formula::Kind::Neg: return 4;
  default: return 5;
  }
}

static void print(const Formula& f, int parent_prec, bool right_of_same, std::string& out) {
  int p = prec(f.kind());
  // A child needs parens when it binds looser than its parent, or equally
  // loose on the side the parent's associativity does not cover.
  bool parens = p < parent_prec || (p == parent_prec && right_of_same);
  if (parens) out += '(';
  switch (f.kind()) {
  case Formula::Kind::Top: out += 'T'; break;
  case Formula::Kind::Bottom: out += 'F'; break;
  case Formula::Kind::Atom: out += f.name(); break;
  case Formula::Kind::Neg:
    out += '~';
    print(f.left(), p, false, out);
    break;
  case Formula::Kind::And:
    print(f.left(), p, false, out);
    out += " & ";
    print(f.right(), p, true, out);
    break;
  case Formula::Kind::Or:
    print(f.left(), p, false, out);
    out += " | ";
    print(f.right(), p, true, out);
    break;
  case Formula::Kind::Imp:
    // Right associative: the left child needs parens at equal precedence.
    print(f.left(), p, true, out);
    out += " -> ";
    print(f.right(), p, false, out);
    break;
  }
  if (parens) out += ')';
}

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, false, out);
  return out;
}

void Formula::collect_atoms(std::vector<std::string>& out) const {
  switch (kind()) {
  case Kind::Atom:
    if (std::find(out.begin(), out.end(), name()) == out.end()) out.push_back(name());
    break;
  case Kind::Neg:
    left().collect_atoms(out);
    break;
  case Kind::And:
  case Kind::Or:
  case Kind::Imp:
    left().collect_atoms(out);
    right().collect_atoms(out);
    break;
  default:
    break;
  }
  std::sort(out.begin(), out.end());
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }
  bool eat_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') { pos += 2; return true; }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos), pos);
  }

  Formula imp() {
    Formula l = disj();
    if (eat_arrow()) return Formula::imp(std::move(l), imp());
    return l;
  }
  Formula disj() {
    Formula l = conj();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '|') { ++pos; l = Formula::disj(std::move(l), conj()); }
      else return l;
    }
  }
  Formula conj() {
    Formula l = unary();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '&') { ++pos; l = Formula::conj(std::move(l), unary()); }
      else return l;
    }
  }
  Formula unary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of formula");
    char c = text[pos];
    if (c == '~') { ++pos; return Formula::neg(unary()); }
    if (c == '(') {
      ++pos;
      Formula f = imp();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string_view word = text.substr(start, pos - start);
      if (word == "T") return Formula::top();
      if (word == "F") return Formula::bottom();
      return Formula::atom(std::string(word));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

} // namespace

Formula parse_formula(std::string_view text) {
  Parser p{text};
  Formula f = p.imp();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

Formula encode_units(const Formula& f, const Formula& witness) {
  switch (f.kind()) {
  case Formula::Kind::Top:
    return Formula::disj(witness, Formula::neg(witness));
  case Formula::Kind::Bottom:
    return Formula::conj(witness, Formula::neg(witness));
  case Formula::Kind::Atom:
    return f;
  case Formula::Kind::Neg:
    return Formula::neg(encode_units(f.left(), witness));
  case Formula::Kind::And:
    return Formula::conj(encode_units(f.left(), witness), encode_units(f.right(), witness));
  case Formula::Kind::Or:
    return Formula::disj(encode_units(f.left(), witness), encode_units(f.right(), witness));
  case Formula::Kind::Imp:
    return Formula::imp(encode_units(f.left(), witness), encode_units(f.right(), witness));
  }
  return f;
}

} // namespace ngraph
