#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgrec/graph.hpp"

namespace kgrec {

enum class CompareOp { Lt, Le, Gt, Ge, Eq, Ne };

// Filter expression tree. Comparison, contains and the logical connectives
// evaluate to pass / fail / error per binding; errors drop the solution and
// are tallied in the query diagnostics.
struct FilterExpr {
  enum class Kind { Compare, Contains, Str, And, Or, Not, Var, Const };

  Kind kind = Kind::Const;
  CompareOp op = CompareOp::Eq;       // Compare only
  std::vector<FilterExpr> children;   // operands, in order
  std::string var;                    // Var only
  std::optional<Term> constant;       // Const only

  static FilterExpr variable(std::string name);
  static FilterExpr constant_term(Term t);
  static FilterExpr compare(CompareOp op, FilterExpr lhs, FilterExpr rhs);
  static FilterExpr contains(FilterExpr haystack, FilterExpr needle);
  static FilterExpr str(FilterExpr inner);
  static FilterExpr logical_and(FilterExpr lhs, FilterExpr rhs);
  static FilterExpr logical_or(FilterExpr lhs, FilterExpr rhs);
  static FilterExpr logical_not(FilterExpr inner);

  std::vector<std::string> variables() const;
};

struct OrderBy {
  std::string var;
  bool ascending = true;
};

struct Query {
  std::vector<std::string> select_vars;
  std::vector<TriplePattern> bgp;
  std::vector<FilterExpr> filters;
  bool distinct = false;
  std::optional<OrderBy> order_by;
  std::optional<std::size_t> limit;
  std::optional<std::size_t> offset;

  std::vector<std::string> bgp_variables() const;
};

using Solution = Binding;

// SPARQL-subset grammar: PREFIX declarations, SELECT [DISTINCT] ?vars,
// WHERE { triple patterns and FILTER clauses separated by '.' }, optional
// ORDER BY [ASC|DESC](?var), LIMIT, OFFSET. Enforces that selected, filter
// and order variables occur in the basic graph pattern.
Query parse_query(std::string_view text);

Query parse_query_file(const std::string& path);

}  // namespace kgrec
