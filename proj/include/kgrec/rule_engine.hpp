#pragma once

#include <optional>
#include <vector>

#include "kgrec/graph.hpp"
#include "kgrec/rule.hpp"

namespace kgrec {

// Evaluates one builtin under a binding. Comparisons and contains return
// the unchanged binding on pass and nullopt on fail. duration extends the
// binding with its out-variable set to the whole number of calendar months
// from the date argument to `reference_date`; when the out position is
// already ground it acts as a check.
//
// Throws TypeError for wrongly typed arguments and EvalError for unbound
// non-output variables or unsupported keywords.
std::optional<Binding> eval_builtin(const BuiltinCall& call, const Binding& binding,
                                    const Date& reference_date);

// Body matches joined across atoms in written order; sameAs holds on term
// identity or an explicit owl:sameAs triple in either direction. Returns
// ground head triples absent from `graph`, in SPO order.
std::vector<Triple> apply_rule_once(const Graph& graph, const Rule& rule,
                                    const Date& reference_date);

struct SaturationResult {
  Graph graph;
  std::vector<Triple> derived;  // SPO order
  int rounds = 0;               // productive rounds
};

// Round-robin application of all rules to a fixpoint. Each round evaluates
// every rule against the snapshot at round start and inserts the union of
// new triples, so the fixpoint does not depend on rule order. Throws
// NonTerminationError when a round past `max_rounds` still adds triples.
SaturationResult saturate(const Graph& graph, const std::vector<Rule>& rules,
                          const Date& reference_date, int max_rounds = 64);

}  // namespace kgrec
