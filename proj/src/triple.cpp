#include "kgrec/triple.hpp"

#include "kgrec/errors.hpp"

namespace kgrec {

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (!subject_.is_iri()) throw TypeError("triple subject must be an IRI: " + to_string(subject_));
  if (!predicate_.is_iri())
    throw TypeError("triple predicate must be an IRI: " + to_string(predicate_));
  if (object_.is_variable())
    throw TypeError("triple object must be ground: " + to_string(object_));
}

const Term& Triple::at(int position) const {
  switch (position) {
    case 0: return subject_;
    case 1: return predicate_;
    default: return object_;
  }
}

bool Triple::operator==(const Triple& other) const {
  return compare_spo(*this, other) == 0;
}

int compare_spo(const Triple& a, const Triple& b) {
  for (int i = 0; i < 3; ++i) {
    int c = compare(a.at(i), b.at(i));
    if (c != 0) return c;
  }
  return 0;
}

std::string to_string(const Triple& t) {
  return to_string(t.subject()) + " " + to_string(t.predicate()) + " " + to_string(t.object());
}

const Term& TriplePattern::at(int position) const {
  switch (position) {
    case 0: return subject;
    case 1: return predicate;
    default: return object;
  }
}

bool TriplePattern::is_ground() const {
  return subject.is_ground() && predicate.is_ground() && object.is_ground();
}

std::vector<std::string> TriplePattern::variables() const {
  std::vector<std::string> names;
  for (int i = 0; i < 3; ++i) {
    if (at(i).is_variable()) {
      const std::string& n = at(i).variable().name();
      bool seen = false;
      for (const auto& existing : names) seen = seen || existing == n;
      if (!seen) names.push_back(n);
    }
  }
  return names;
}

TriplePattern substitute(const TriplePattern& pattern, const Binding& binding) {
  auto subst = [&](const Term& t) -> Term {
    if (t.is_variable()) {
      auto it = binding.find(t.variable().name());
      if (it != binding.end()) return it->second;
    }
    return t;
  };
  return TriplePattern{subst(pattern.subject), subst(pattern.predicate), subst(pattern.object)};
}

std::optional<Binding> unify(const Triple& triple, const TriplePattern& pattern) {
  Binding binding;
  for (int i = 0; i < 3; ++i) {
    const Term& p = pattern.at(i);
    const Term& t = triple.at(i);
    if (p.is_variable()) {
      auto [it, inserted] = binding.emplace(p.variable().name(), t);
      if (!inserted && !(it->second == t)) return std::nullopt;
    } else if (!(p == t)) {
      return std::nullopt;
    }
  }
  return binding;
}

}  // namespace kgrec
