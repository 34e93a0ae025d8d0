#pragma once

#include <string>
#include <vector>

#include "kgrec/query.hpp"

namespace kgrec {

enum class Truth { True, False, Error };

// Three-valued evaluation: False wins over Error for AND, True wins over
// Error for OR, NOT preserves Error.
Truth eval_filter_expr(const FilterExpr& expr, const Solution& solution);

struct FilterDiagnostics {
  std::size_t dropped_fail = 0;
  std::size_t dropped_error = 0;
};

// Keeps solutions where the filter passes; both fail and error drop.
std::vector<Solution> eval_filter(const std::vector<Solution>& solutions, const FilterExpr& filter,
                                  FilterDiagnostics* diagnostics = nullptr);

// Natural join of the per-pattern matches, in canonical solution order
// (lexicographic over the sorted variable/term entries). Pattern order does
// not affect the result. An empty BGP yields one empty solution.
std::vector<Solution> eval_bgp(const Graph& graph, const std::vector<TriplePattern>& bgp);

struct QueryResult {
  std::vector<Solution> solutions;
  std::size_t filter_errors = 0;
};

// Pipeline: eval_bgp, filters, DISTINCT (on the projected variables),
// ORDER BY with full-solution tiebreak, OFFSET/LIMIT, projection. Fully
// deterministic.
QueryResult execute(const Graph& graph, const Query& query);

bool solution_less(const Solution& a, const Solution& b);

// Export formats: JSON is a list of var -> {kind, value[, datatype]}
// records; CSV has one column per selected variable.
std::string solutions_to_json(const std::vector<Solution>& solutions,
                              const std::vector<std::string>& vars);
std::string solutions_to_csv(const std::vector<Solution>& solutions,
                             const std::vector<std::string>& vars);

}  // namespace kgrec
