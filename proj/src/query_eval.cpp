#include "kgrec/query_eval.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace kgrec {

namespace {

// Expression evaluation yields a ground term or an error (nullopt).
std::optional<Term> eval_term(const FilterExpr& expr, const Solution& solution);

std::optional<Term> truth_to_term(Truth t) {
  switch (t) {
    case Truth::True: return Term(Literal::boolean(true));
    case Truth::False: return Term(Literal::boolean(false));
    case Truth::Error: return std::nullopt;
  }
  return std::nullopt;
}

// nullopt = incomparable (type error). Numeric comparisons coerce integer
// and float; no string-to-number coercion.
std::optional<int> compare_values(const Term& a, const Term& b) {
  if (a.is_iri() && b.is_iri()) {
    int c = a.iri().text().compare(b.iri().text());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (!a.is_literal() || !b.is_literal()) return std::nullopt;
  const Literal& la = a.literal();
  const Literal& lb = b.literal();
  if (la.is_numeric() && lb.is_numeric()) {
    double x = la.numeric(), y = lb.numeric();
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  if (la.type() != lb.type()) return std::nullopt;
  switch (la.type()) {
    case Datatype::String: {
      int c = la.lexical().compare(lb.lexical());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Datatype::Date: {
      auto c = la.as_date() <=> lb.as_date();
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Datatype::Boolean:
      return static_cast<int>(la.as_boolean()) - static_cast<int>(lb.as_boolean());
    default:
      return std::nullopt;
  }
}

Truth eval_compare(const FilterExpr& expr, const Solution& solution) {
  auto lhs = eval_term(expr.children[0], solution);
  auto rhs = eval_term(expr.children[1], solution);
  if (!lhs || !rhs) return Truth::Error;

  // Equality across term kinds is decidable: an IRI never equals a literal.
  if (expr.op == CompareOp::Eq || expr.op == CompareOp::Ne) {
    if (lhs->is_iri() != rhs->is_iri()) {
      bool equal = false;
      return (equal == (expr.op == CompareOp::Eq)) ? Truth::True : Truth::False;
    }
  }

  auto c = compare_values(*lhs, *rhs);
  if (!c) return Truth::Error;
  bool result = false;
  switch (expr.op) {
    case CompareOp::Lt: result = *c < 0; break;
    case CompareOp::Le: result = *c <= 0; break;
    case CompareOp::Gt: result = *c > 0; break;
    case CompareOp::Ge: result = *c >= 0; break;
    case CompareOp::Eq: result = *c == 0; break;
    case CompareOp::Ne: result = *c != 0; break;
  }
  return result ? Truth::True : Truth::False;
}

Truth eval_contains(const FilterExpr& expr, const Solution& solution) {
  auto haystack = eval_term(expr.children[0], solution);
  auto needle = eval_term(expr.children[1], solution);
  if (!haystack || !needle) return Truth::Error;
  auto as_string = [](const Term& t) -> std::optional<std::string> {
    if (t.is_literal() && t.literal().type() == Datatype::String) return t.literal().lexical();
    return std::nullopt;
  };
  auto h = as_string(*haystack);
  auto n = as_string(*needle);
  if (!h || !n) return Truth::Error;
  return h->find(*n) != std::string::npos ? Truth::True : Truth::False;
}

std::optional<Term> eval_term(const FilterExpr& expr, const Solution& solution) {
  switch (expr.kind) {
    case FilterExpr::Kind::Var: {
      auto it = solution.find(expr.var);
      if (it == solution.end()) return std::nullopt;
      return it->second;
    }
    case FilterExpr::Kind::Const:
      return expr.constant;
    case FilterExpr::Kind::Str: {
      auto inner = eval_term(expr.children[0], solution);
      if (!inner) return std::nullopt;
      if (inner->is_iri()) return Term(Literal::string(inner->iri().text()));
      if (inner->is_literal()) return Term(Literal::string(inner->literal().lexical()));
      return std::nullopt;
    }
    default:
      return truth_to_term(eval_filter_expr(expr, solution));
  }
}

}  // namespace

Truth eval_filter_expr(const FilterExpr& expr, const Solution& solution) {
  switch (expr.kind) {
    case FilterExpr::Kind::Compare:
      return eval_compare(expr, solution);
    case FilterExpr::Kind::Contains:
      return eval_contains(expr, solution);
    case FilterExpr::Kind::And: {
      Truth l = eval_filter_expr(expr.children[0], solution);
      Truth r = eval_filter_expr(expr.children[1], solution);
      if (l == Truth::False || r == Truth::False) return Truth::False;
      if (l == Truth::Error || r == Truth::Error) return Truth::Error;
      return Truth::True;
    }
    case FilterExpr::Kind::Or: {
      Truth l = eval_filter_expr(expr.children[0], solution);
      Truth r = eval_filter_expr(expr.children[1], solution);
      if (l == Truth::True || r == Truth::True) return Truth::True;
      if (l == Truth::Error || r == Truth::Error) return Truth::Error;
      return Truth::False;
    }
    case FilterExpr::Kind::Not: {
      Truth inner = eval_filter_expr(expr.children[0], solution);
      if (inner == Truth::Error) return Truth::Error;
      return inner == Truth::True ? Truth::False : Truth::True;
    }
    case FilterExpr::Kind::Var:
    case FilterExpr::Kind::Const:
    case FilterExpr::Kind::Str: {
      // Effective boolean value: only boolean literals qualify.
      auto value = eval_term(expr, solution);
      if (!value || !value->is_literal() || value->literal().type() != Datatype::Boolean)
        return Truth::Error;
      return value->literal().as_boolean() ? Truth::True : Truth::False;
    }
  }
  return Truth::Error;
}

std::vector<Solution> eval_filter(const std::vector<Solution>& solutions, const FilterExpr& filter,
                                  FilterDiagnostics* diagnostics) {
  std::vector<Solution> kept;
  for (const Solution& solution : solutions) {
    switch (eval_filter_expr(filter, solution)) {
      case Truth::True:
        kept.push_back(solution);
        break;
      case Truth::False:
        if (diagnostics) diagnostics->dropped_fail += 1;
        break;
      case Truth::Error:
        if (diagnostics) diagnostics->dropped_error += 1;
        break;
    }
  }
  return kept;
}

bool solution_less(const Solution& a, const Solution& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    int c = compare(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::vector<Solution> eval_bgp(const Graph& graph, const std::vector<TriplePattern>& bgp) {
  std::vector<Solution> solutions = {Solution{}};
  std::vector<bool> used(bgp.size(), false);
  std::set<std::string> bound;

  for (std::size_t step = 0; step < bgp.size(); ++step) {
    // Greedy selectivity: prefer the pattern with the most positions that
    // are ground or already bound; original position breaks ties.
    std::size_t best = bgp.size();
    int best_score = -1;
    for (std::size_t i = 0; i < bgp.size(); ++i) {
      if (used[i]) continue;
      int score = 0;
      for (int pos = 0; pos < 3; ++pos) {
        const Term& t = bgp[i].at(pos);
        if (t.is_ground() || bound.contains(t.variable().name())) ++score;
      }
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    used[best] = true;
    for (const std::string& v : bgp[best].variables()) bound.insert(v);

    std::vector<Solution> extended;
    for (const Solution& solution : solutions) {
      for (Binding extra : graph.match(substitute(bgp[best], solution))) {
        Solution merged = solution;
        merged.merge(extra);
        extended.push_back(std::move(merged));
      }
    }
    solutions = std::move(extended);
    if (solutions.empty()) return solutions;
  }

  std::sort(solutions.begin(), solutions.end(), solution_less);
  return solutions;
}

namespace {

Solution project(const Solution& solution, const std::vector<std::string>& vars) {
  Solution out;
  for (const std::string& v : vars) {
    auto it = solution.find(v);
    if (it != solution.end()) out.emplace(v, it->second);
  }
  return out;
}

}  // namespace

QueryResult execute(const Graph& graph, const Query& query) {
  QueryResult result;
  std::vector<Solution> solutions = eval_bgp(graph, query.bgp);

  FilterDiagnostics diag;
  for (const FilterExpr& filter : query.filters) {
    solutions = eval_filter(solutions, filter, &diag);
  }
  result.filter_errors = diag.dropped_error;

  if (query.distinct) {
    // Duplicates are judged on the projected variables; the first full
    // solution in canonical order survives.
    std::set<Solution, decltype(&solution_less)> seen(&solution_less);
    std::vector<Solution> unique;
    for (const Solution& solution : solutions) {
      if (seen.insert(project(solution, query.select_vars)).second) unique.push_back(solution);
    }
    solutions = std::move(unique);
  }

  if (query.order_by) {
    const OrderBy& order = *query.order_by;
    std::stable_sort(solutions.begin(), solutions.end(),
                     [&](const Solution& a, const Solution& b) {
                       const Term& ta = a.at(order.var);
                       const Term& tb = b.at(order.var);
                       int c = compare(ta, tb);
                       if (c != 0) return order.ascending ? c < 0 : c > 0;
                       return solution_less(a, b);
                     });
  }

  std::size_t begin = std::min(query.offset.value_or(0), solutions.size());
  std::size_t end = solutions.size();
  if (query.limit) end = std::min(end, begin + *query.limit);
  std::vector<Solution> window(solutions.begin() + static_cast<std::ptrdiff_t>(begin),
                               solutions.begin() + static_cast<std::ptrdiff_t>(end));

  result.solutions.reserve(window.size());
  for (const Solution& solution : window) {
    result.solutions.push_back(project(solution, query.select_vars));
  }
  return result;
}

std::string solutions_to_json(const std::vector<Solution>& solutions,
                              const std::vector<std::string>& vars) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Solution& solution : solutions) {
    nlohmann::json row = nlohmann::json::object();
    for (const std::string& v : vars) {
      auto it = solution.find(v);
      if (it == solution.end()) continue;
      nlohmann::json cell;
      if (it->second.is_iri()) {
        cell["kind"] = "iri";
        cell["value"] = it->second.iri().text();
      } else {
        const Literal& lit = it->second.literal();
        cell["kind"] = "literal";
        cell["datatype"] = std::string(datatype_name(lit.type()));
        cell["value"] = lit.lexical();
      }
      row[v] = std::move(cell);
    }
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

namespace {

std::string csv_cell(const std::string& raw) {
  bool needs_quote = raw.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quote) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace

std::string solutions_to_csv(const std::vector<Solution>& solutions,
                             const std::vector<std::string>& vars) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_cell(vars[i]);
  }
  out << '\n';
  for (const Solution& solution : solutions) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i > 0) out << ',';
      auto it = solution.find(vars[i]);
      if (it == solution.end()) continue;
      if (it->second.is_iri()) out << csv_cell(it->second.iri().text());
      else out << csv_cell(it->second.literal().lexical());
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace kgrec
