#include "kgrec/recommender.hpp"

#include <algorithm>

#include "kgrec/errors.hpp"
#include "kgrec/vocab.hpp"

namespace kgrec {

CatalogSchema CatalogSchema::standard() {
  CatalogSchema schema;
  schema.paths["nom"] = {vocab::nom()};
  schema.paths["prix"] = {vocab::estimation(), vocab::a_valeur_monetaire()};
  schema.paths["typeDeCarrosserie"] = {vocab::style_vehicule()};
  schema.paths["nombreDeSieges"] = {vocab::nombre_de_places(), vocab::a_valeur_entier()};
  schema.paths["anneeDuModele"] = {vocab::annee_du_modele()};
  schema.paths["marque"] = {vocab::a_fabricant()};
  schema.paths["kilometrage"] = {vocab::kilometrage_odometre(), vocab::a_valeur_float()};
  // Not an item-side variable of the schema proper, but the color
  // constraint needs a mapped path too.
  schema.paths["couleur"] = {vocab::couleur()};
  return schema;
}

const std::vector<Iri>& CatalogSchema::path(const std::string& item_var) const {
  auto it = paths.find(item_var);
  if (it == paths.end()) throw Error("no schema path for item variable " + item_var);
  return it->second;
}

namespace {

// Patterns reaching the value of `schema_var` from the item node. The value
// variable is the last hop's object.
std::vector<TriplePattern> path_patterns(const CatalogSchema& schema, const std::string& schema_var,
                                         const std::string& value_var) {
  const std::vector<Iri>& path = schema.path(schema_var);
  std::vector<TriplePattern> patterns;
  Term current{Variable(kItemVar)};
  for (std::size_t i = 0; i < path.size(); ++i) {
    bool last = i + 1 == path.size();
    Term next(Variable(last ? value_var : schema_var + "_node"));
    patterns.push_back(TriplePattern{current, Term(path[i]), next});
    current = next;
  }
  return patterns;
}

}  // namespace

PreferenceConstraint compile_constraint(ConstraintLabel label, const UserProfile& profile,
                                        const CatalogSchema& schema) {
  if (!profile.supplies(label))
    throw MissingPreferenceError("profile " + profile.user_id + " does not supply " +
                                 std::string(label_name(label)));
  PreferenceConstraint out;
  out.label = label;
  switch (label) {
    case ConstraintLabel::Price: {
      out.patterns = path_patterns(schema, "prix", "prix");
      FilterExpr upper = FilterExpr::compare(CompareOp::Le, FilterExpr::variable("prix"),
                                             FilterExpr::constant_term(Term(
                                                 Literal::integer(*profile.max_budget))));
      if (profile.min_budget) {
        FilterExpr lower = FilterExpr::compare(CompareOp::Ge, FilterExpr::variable("prix"),
                                               FilterExpr::constant_term(Term(
                                                   Literal::integer(*profile.min_budget))));
        out.filter = FilterExpr::logical_and(std::move(upper), std::move(lower));
      } else {
        out.filter = std::move(upper);
      }
      break;
    }
    case ConstraintLabel::Mileage: {
      out.patterns = path_patterns(schema, "kilometrage", "valeurKilometrage");
      // Strict bound: the mileage must be below the user's maximum.
      out.filter = FilterExpr::compare(
          CompareOp::Lt, FilterExpr::variable("valeurKilometrage"),
          FilterExpr::constant_term(Term(Literal::integer(*profile.max_mileage))));
      break;
    }
    case ConstraintLabel::Seats: {
      out.patterns = path_patterns(schema, "nombreDeSieges", "places");
      out.filter = FilterExpr::compare(
          CompareOp::Eq, FilterExpr::variable("places"),
          FilterExpr::constant_term(Term(Literal::integer(*profile.seats))));
      break;
    }
    case ConstraintLabel::Color: {
      out.patterns = path_patterns(schema, "couleur", "couleur");
      std::optional<FilterExpr> disjunction;
      for (const std::string& color : profile.colors) {
        FilterExpr test = FilterExpr::contains(FilterExpr::variable("couleur"),
                                               FilterExpr::constant_term(Term(
                                                   Literal::string(color))));
        if (disjunction) {
          disjunction = FilterExpr::logical_or(std::move(*disjunction), std::move(test));
        } else {
          disjunction = std::move(test);
        }
      }
      out.filter = std::move(disjunction);
      break;
    }
    case ConstraintLabel::Brand: {
      out.patterns = path_patterns(schema, "marque", "marque");
      out.filter =
          FilterExpr::contains(FilterExpr::str(FilterExpr::variable("marque")),
                               FilterExpr::constant_term(Term(Literal::string(*profile.brand))));
      break;
    }
    case ConstraintLabel::VehicleType: {
      // Exact-value pattern; no filter needed.
      const std::vector<Iri>& path = schema.path("typeDeCarrosserie");
      out.patterns.push_back(TriplePattern{Term(Variable(kItemVar)), Term(path.front()),
                                           Term(Iri(vocab::kUvso + *profile.vehicle_type))});
      break;
    }
  }
  return out;
}

RecommendationTask RecommendationTask::make(UserProfile profile, CatalogSchema schema,
                                            std::vector<Rule> rules) {
  RecommendationTask task;
  task.profile = std::move(profile);
  task.schema = std::move(schema);
  task.rules = std::move(rules);
  for (ConstraintLabel label : task.profile.supplied()) {
    task.constraints.push_back(compile_constraint(label, task.profile, task.schema));
  }
  return task;
}

Query compile_profile(const RecommendationTask& task, const std::set<ConstraintLabel>& active) {
  Query query;
  query.select_vars = {kItemVar};
  query.distinct = true;
  query.bgp.push_back(TriplePattern{Term(Variable(kItemVar)), Term(vocab::rdf_type()),
                                    Term(vocab::automobile())});
  auto same_pattern = [](const TriplePattern& a, const TriplePattern& b) {
    return a.subject == b.subject && a.predicate == b.predicate && a.object == b.object;
  };
  auto add_patterns = [&](const std::vector<TriplePattern>& patterns) {
    for (const TriplePattern& p : patterns) {
      bool present = false;
      for (const TriplePattern& q : query.bgp) present = present || same_pattern(p, q);
      if (!present) query.bgp.push_back(p);
    }
  };
  for (const PreferenceConstraint& constraint : task.constraints) {
    if (!active.contains(constraint.label)) continue;
    add_patterns(constraint.patterns);
    if (constraint.filter) query.filters.push_back(*constraint.filter);
  }
  return query;
}

std::vector<Iri> recommend(const Graph& graph, const RecommendationTask& task, std::size_t k) {
  std::set<ConstraintLabel> active;
  for (ConstraintLabel label : task.profile.supplied()) active.insert(label);
  Query query = compile_profile(task, active);
  QueryResult result = execute(graph, query);
  if (result.solutions.empty()) throw InconsistentTaskError(task.profile.user_id);
  std::vector<Iri> items;
  for (const Solution& solution : result.solutions) {
    if (items.size() >= k) break;
    items.push_back(solution.at(kItemVar).iri());
  }
  return items;
}

std::size_t solution_count(const Graph& graph, const RecommendationTask& task,
                           const std::set<ConstraintLabel>& active) {
  Query query = compile_profile(task, active);
  return execute(graph, query).solutions.size();
}

}  // namespace kgrec
