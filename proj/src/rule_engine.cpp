#include "kgrec/rule_engine.hpp"

#include <algorithm>
#include <set>

#include "kgrec/errors.hpp"
#include "kgrec/vocab.hpp"

namespace kgrec {

namespace {

Term resolve_arg(const Term& t, const Binding& binding) {
  if (t.is_variable()) {
    auto it = binding.find(t.variable().name());
    if (it != binding.end()) return it->second;
  }
  return t;
}

std::string binding_to_string(const Binding& binding) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, term] : binding) {
    if (!first) out += ", ";
    out += "?" + name + " -> " + to_string(term);
    first = false;
  }
  return out + "}";
}

double numeric_arg(const BuiltinCall& call, const Term& t, const Binding& binding) {
  Term v = resolve_arg(t, binding);
  if (v.is_variable())
    throw EvalError("unbound variable ?" + v.variable().name() + " in " +
                    std::string(builtin_name_text(call.name)) + " " + binding_to_string(binding));
  if (!v.is_literal() || !v.literal().is_numeric())
    throw TypeError(std::string(builtin_name_text(call.name)) + " needs a numeric argument, got " +
                    to_string(v) + " under " + binding_to_string(binding));
  return v.literal().numeric();
}

std::string string_arg(const BuiltinCall& call, const Term& t, const Binding& binding) {
  Term v = resolve_arg(t, binding);
  if (v.is_variable())
    throw EvalError("unbound variable ?" + v.variable().name() + " in " +
                    std::string(builtin_name_text(call.name)));
  if (!v.is_literal() || v.literal().type() != Datatype::String)
    throw TypeError(std::string(builtin_name_text(call.name)) + " needs a string argument, got " +
                    to_string(v) + " under " + binding_to_string(binding));
  return v.literal().lexical();
}

std::optional<Binding> pass_if(bool ok, const Binding& binding) {
  if (ok) return binding;
  return std::nullopt;
}

}  // namespace

std::optional<Binding> eval_builtin(const BuiltinCall& call, const Binding& binding,
                                    const Date& reference_date) {
  switch (call.name) {
    case BuiltinName::GreaterThan:
      return pass_if(numeric_arg(call, call.args[0], binding) >
                         numeric_arg(call, call.args[1], binding),
                     binding);
    case BuiltinName::LessThan:
      return pass_if(numeric_arg(call, call.args[0], binding) <
                         numeric_arg(call, call.args[1], binding),
                     binding);
    case BuiltinName::Equal:
      return pass_if(numeric_arg(call, call.args[0], binding) ==
                         numeric_arg(call, call.args[1], binding),
                     binding);
    case BuiltinName::Contains: {
      std::string haystack = string_arg(call, call.args[0], binding);
      std::string needle = string_arg(call, call.args[1], binding);
      return pass_if(haystack.find(needle) != std::string::npos, binding);
    }
    case BuiltinName::Duration: {
      Term date_term = resolve_arg(call.args[1], binding);
      if (date_term.is_variable())
        throw EvalError("unbound date argument ?" + date_term.variable().name() + " in duration");
      if (!date_term.is_literal() || date_term.literal().type() != Datatype::Date)
        throw TypeError("duration needs a date argument, got " + to_string(date_term) +
                        " under " + binding_to_string(binding));
      std::string reference = string_arg(call, call.args[2], binding);
      std::string unit = string_arg(call, call.args[3], binding);
      if (reference != "maintenant")
        throw EvalError("duration reference must be \"maintenant\", got \"" + reference + "\"");
      if (unit != "mois") throw EvalError("duration unit must be \"mois\", got \"" + unit + "\"");

      long long months = months_between(date_term.literal().as_date(), reference_date);
      Term out = resolve_arg(call.args[0], binding);
      if (out.is_variable()) {
        Binding extended = binding;
        extended.emplace(out.variable().name(), Term(Literal::integer(months)));
        return extended;
      }
      if (!out.is_literal() || !out.literal().is_numeric())
        throw TypeError("duration output position must be numeric, got " + to_string(out));
      return pass_if(out.literal().numeric() == static_cast<double>(months), binding);
    }
  }
  return std::nullopt;
}

namespace {

TriplePattern atom_pattern(const ClassAtom& atom) {
  return TriplePattern{atom.arg, Term(vocab::rdf_type()), Term(atom.cls)};
}

TriplePattern atom_pattern(const PropertyAtom& atom) {
  return TriplePattern{atom.arg0, Term(atom.pred), atom.arg1};
}

bool same_as_holds(const Graph& graph, const Term& a, const Term& b) {
  if (a == b) return true;
  if (!a.is_iri() || !b.is_iri()) return false;
  Term same_as(vocab::owl_same_as());
  return graph.contains(Triple(a, same_as, b)) || graph.contains(Triple(b, same_as, a));
}

std::vector<Binding> extend_with_pattern(const Graph& graph, const TriplePattern& pattern,
                                         const std::vector<Binding>& partials) {
  std::vector<Binding> extended;
  for (const Binding& binding : partials) {
    for (Binding extra : graph.match(substitute(pattern, binding))) {
      Binding merged = binding;
      merged.merge(extra);
      extended.push_back(std::move(merged));
    }
  }
  return extended;
}

std::vector<Binding> extend_with_same_as(const Graph& graph, const SameAsAtom& atom,
                                         const std::vector<Binding>& partials,
                                         const std::string& rule_id) {
  std::vector<Binding> extended;
  for (const Binding& binding : partials) {
    Term a = resolve_arg(atom.arg0, binding);
    Term b = resolve_arg(atom.arg1, binding);
    if (a.is_variable() && b.is_variable())
      throw EvalError("rule " + rule_id + ": sameAs needs at least one bound argument");
    if (!a.is_variable() && !b.is_variable()) {
      if (same_as_holds(graph, a, b)) extended.push_back(binding);
      continue;
    }
    const Term& ground = a.is_variable() ? b : a;
    const std::string var = (a.is_variable() ? a : b).variable().name();
    std::set<Term> candidates;
    candidates.insert(ground);
    if (ground.is_iri()) {
      Term same_as(vocab::owl_same_as());
      for (const Triple& t :
           graph.match_triples(TriplePattern{Term(Variable("x")), same_as, ground}))
        candidates.insert(t.subject());
      for (const Triple& t :
           graph.match_triples(TriplePattern{ground, same_as, Term(Variable("x"))}))
        candidates.insert(t.object());
    }
    for (const Term& candidate : candidates) {
      Binding merged = binding;
      merged.emplace(var, candidate);
      extended.push_back(std::move(merged));
    }
  }
  return extended;
}

Term ground_or_throw(const Term& t, const Binding& binding, const std::string& rule_id) {
  Term v = resolve_arg(t, binding);
  if (v.is_variable())
    throw EvalError("rule " + rule_id + ": head variable ?" + v.variable().name() +
                    " unbound at grounding");
  return v;
}

void ground_head(const Atom& atom, const Binding& binding, const std::string& rule_id,
                 std::set<Triple>& out) {
  if (const auto* c = std::get_if<ClassAtom>(&atom)) {
    out.insert(Triple(ground_or_throw(c->arg, binding, rule_id), Term(vocab::rdf_type()),
                      Term(c->cls)));
  } else if (const auto* p = std::get_if<PropertyAtom>(&atom)) {
    out.insert(Triple(ground_or_throw(p->arg0, binding, rule_id), Term(p->pred),
                      ground_or_throw(p->arg1, binding, rule_id)));
  } else if (const auto* s = std::get_if<SameAsAtom>(&atom)) {
    out.insert(Triple(ground_or_throw(s->arg0, binding, rule_id), Term(vocab::owl_same_as()),
                      ground_or_throw(s->arg1, binding, rule_id)));
  }
}

}  // namespace

std::vector<Triple> apply_rule_once(const Graph& graph, const Rule& rule,
                                    const Date& reference_date) {
  std::vector<Binding> bindings = {Binding{}};
  for (const Atom& atom : rule.body) {
    if (bindings.empty()) break;
    if (const auto* c = std::get_if<ClassAtom>(&atom)) {
      bindings = extend_with_pattern(graph, atom_pattern(*c), bindings);
    } else if (const auto* p = std::get_if<PropertyAtom>(&atom)) {
      bindings = extend_with_pattern(graph, atom_pattern(*p), bindings);
    } else if (const auto* s = std::get_if<SameAsAtom>(&atom)) {
      bindings = extend_with_same_as(graph, *s, bindings, rule.id);
    } else if (const auto* b = std::get_if<BuiltinCall>(&atom)) {
      std::vector<Binding> kept;
      for (const Binding& binding : bindings) {
        if (auto extended = eval_builtin(*b, binding, reference_date))
          kept.push_back(std::move(*extended));
      }
      bindings = std::move(kept);
    }
  }

  std::set<Triple> derived;
  for (const Binding& binding : bindings) {
    for (const Atom& atom : rule.head) ground_head(atom, binding, rule.id, derived);
  }
  std::vector<Triple> fresh;
  for (const Triple& t : derived) {
    if (!graph.contains(t)) fresh.push_back(t);
  }
  return fresh;
}

SaturationResult saturate(const Graph& graph, const std::vector<Rule>& rules,
                          const Date& reference_date, int max_rounds) {
  if (max_rounds < 1) throw Error("max_rounds must be >= 1");
  for (const Rule& rule : rules) check_rule_safety(rule);

  SaturationResult result{graph, {}, 0};
  std::set<Triple> all_derived;
  while (true) {
    std::set<Triple> round_delta;
    for (const Rule& rule : rules) {
      for (Triple& t : apply_rule_once(result.graph, rule, reference_date))
        round_delta.insert(std::move(t));
    }
    if (round_delta.empty()) break;
    result.rounds += 1;
    if (result.rounds > max_rounds) throw NonTerminationError(result.rounds);
    result.graph =
        result.graph.insert_all(std::vector<Triple>(round_delta.begin(), round_delta.end()));
    all_derived.insert(round_delta.begin(), round_delta.end());
  }
  result.derived.assign(all_derived.begin(), all_derived.end());
  return result;
}

}  // namespace kgrec
