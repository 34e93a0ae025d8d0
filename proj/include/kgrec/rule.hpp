#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kgrec/term.hpp"

namespace kgrec {

enum class BuiltinName { GreaterThan, LessThan, Equal, Contains, Duration };

std::string_view builtin_name_text(BuiltinName name);

struct BuiltinCall {
  BuiltinName name;
  // Comparisons and contains take 2 args; duration takes
  // (out-variable, date-term, reference-keyword, unit-keyword).
  std::vector<Term> args;
};

struct ClassAtom {
  Iri cls;
  Term arg;
};

struct PropertyAtom {
  Iri pred;
  Term arg0;
  Term arg1;
};

struct SameAsAtom {
  Term arg0;
  Term arg1;
};

using Atom = std::variant<ClassAtom, PropertyAtom, SameAsAtom, BuiltinCall>;

struct Rule {
  std::string id;
  std::vector<Atom> body;
  std::vector<Atom> head;
};

// Variables bound by the body: every variable of a class/property/sameAs
// atom, plus the first argument of each duration builtin.
std::vector<std::string> body_bound_variables(const Rule& rule);

// Throws Error naming the offending variable when a head variable is not
// bound by the body, or when the head contains a builtin atom.
void check_rule_safety(const Rule& rule);

// Rule file grammar, one rule per '.'-terminated statement:
//
//   id: atom ∧ atom ∧ ... -> atom ∧ atom .
//
// Atoms are Class(arg), pred(arg, arg), sameAs(a, b) or a builtin call
// prefixed builtin:/swrlb:/temporal:. Terms are ?variables, <iris>,
// prefix:local names (default prefixes of the vocabulary), bare names
// (resolved in the uvso namespace), numbers, "strings", dates and the
// boolean words true/false/vrai/faux. '∧' may be written '&&'. '#' starts
// a comment line.
std::vector<Rule> parse_rules(std::string_view text);

std::vector<Rule> parse_rules_file(const std::string& path);

}  // namespace kgrec
