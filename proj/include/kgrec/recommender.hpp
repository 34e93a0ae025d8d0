#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kgrec/profile.hpp"
#include "kgrec/query.hpp"
#include "kgrec/query_eval.hpp"
#include "kgrec/rule.hpp"

namespace kgrec {

// Maps each item-side variable to its property path from the item node.
// Paths have one or two hops; two-hop paths go through a value node.
struct CatalogSchema {
  std::map<std::string, std::vector<Iri>> paths;

  static CatalogSchema standard();

  const std::vector<Iri>& path(const std::string& item_var) const;
};

// A compiled preference constraint: the graph-pattern fragment that reaches
// the constrained value plus an optional filter over it. VehicleType
// compiles to a ground-object pattern and has no filter.
struct PreferenceConstraint {
  ConstraintLabel label;
  std::vector<TriplePattern> patterns;
  std::optional<FilterExpr> filter;
};

// Item variable used by compiled queries.
inline const std::string kItemVar = "auto";

// Compiles one label against the profile's value. Throws
// MissingPreferenceError when the profile does not supply the label.
PreferenceConstraint compile_constraint(ConstraintLabel label, const UserProfile& profile,
                                        const CatalogSchema& schema);

struct RecommendationTask {
  UserProfile profile;
  CatalogSchema schema;
  std::vector<Rule> rules;                       // domain-knowledge constraints
  std::vector<PreferenceConstraint> constraints; // compiled filter constraints

  static RecommendationTask make(UserProfile profile, CatalogSchema schema,
                                 std::vector<Rule> rules = {});
};

// A single query over the item variable whose graph pattern unions the
// schema paths needed by the active labels plus the item type pattern, and
// whose filters are the compiled constraints.
Query compile_profile(const RecommendationTask& task, const std::set<ConstraintLabel>& active);

// Executes the fully constrained query against a graph already saturated
// with the domain rules; returns up to k item IRIs in deterministic term
// order. Throws InconsistentTaskError when there is no solution.
std::vector<Iri> recommend(const Graph& graph, const RecommendationTask& task, std::size_t k);

// Distinct item count under the active constraint subset; 0 for an
// inconsistent selection.
std::size_t solution_count(const Graph& graph, const RecommendationTask& task,
                           const std::set<ConstraintLabel>& active);

}  // namespace kgrec
