#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgrec/term.hpp"

namespace kgrec {

// A fully ground RDF statement: subject and predicate are IRIs, the object
// is an IRI or a literal. The constructor enforces this.
class Triple {
 public:
  Triple(Term subject, Term predicate, Term object);

  const Term& subject() const { return subject_; }
  const Term& predicate() const { return predicate_; }
  const Term& object() const { return object_; }

  // 0 = subject, 1 = predicate, 2 = object.
  const Term& at(int position) const;

  bool operator==(const Triple& other) const;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

// Component-wise SPO comparison; also the canonical serialization order.
int compare_spo(const Triple& a, const Triple& b);

inline bool operator<(const Triple& a, const Triple& b) { return compare_spo(a, b) < 0; }

std::string to_string(const Triple& t);

// Triple shape with variables allowed in any position. A fully ground
// pattern acts as a membership test.
struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  const Term& at(int position) const;
  bool is_ground() const;
  std::vector<std::string> variables() const;
};

// Replaces pattern variables that are bound in `binding`; unbound variables
// stay in place.
TriplePattern substitute(const TriplePattern& pattern, const Binding& binding);

// One binding per unifying triple, mapping exactly the pattern's variables.
// A repeated variable must match equal terms in both positions.
std::optional<Binding> unify(const Triple& triple, const TriplePattern& pattern);

}  // namespace kgrec
