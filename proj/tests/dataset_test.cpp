#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "kgrec/dataset.hpp"
#include "kgrec/ntriples.hpp"
#include "kgrec/recommender.hpp"
#include "kgrec/vocab.hpp"
#include "test_support.hpp"

using namespace kgrec;
using namespace kgrec::test;

TEST_CASE("generate: zero sizes give empty outputs") {
  GeneratedData data = generate(GeneratorConfig{1, 0, 0});
  CHECK(data.vehicles.empty());
  CHECK(data.users.empty());
  CHECK(data.interactions.empty());
  CHECK(data.profiles.empty());
  CHECK(data.interaction_records.empty());
}

TEST_CASE("generate: equal seeds give byte-identical outputs") {
  GeneratedData a = generate(GeneratorConfig{500, 120, 30});
  GeneratedData b = generate(GeneratorConfig{500, 120, 30});
  CHECK(serialize_ntriples(a.vehicles) == serialize_ntriples(b.vehicles));
  CHECK(serialize_ntriples(a.users) == serialize_ntriples(b.users));
  CHECK(serialize_ntriples(a.interactions) == serialize_ntriples(b.interactions));
  CHECK(profiles_to_json(a.profiles) == profiles_to_json(b.profiles));

  GeneratedData c = generate(GeneratorConfig{501, 120, 30});
  CHECK(serialize_ntriples(c.vehicles) != serialize_ntriples(a.vehicles));
}

TEST_CASE("generate: every vehicle carries all seven item properties") {
  GeneratedData data = generate(GeneratorConfig{7, 160, 0});
  CatalogSchema schema = CatalogSchema::standard();
  auto vehicles = data.vehicles.match_triples(
      TriplePattern{var("v"), Term(vocab::rdf_type()), Term(vocab::automobile())});
  REQUIRE(vehicles.size() == 160);
  const std::vector<std::string> item_vars = {
      "nom", "prix", "typeDeCarrosserie", "nombreDeSieges", "anneeDuModele", "marque",
      "kilometrage"};
  for (const Triple& t : vehicles) {
    for (const std::string& item_var : item_vars) {
      const std::vector<Iri>& path = schema.path(item_var);
      Term node = t.subject();
      for (const Iri& hop : path) {
        auto hits = data.vehicles.match_triples(TriplePattern{node, Term(hop), var("x")});
        REQUIRE(hits.size() == 1);
        node = hits[0].object();
      }
      CHECK(node.is_ground());
    }
  }
}

TEST_CASE("generate: default pools are fully covered at 100+ vehicles") {
  GeneratedData data = generate(GeneratorConfig{13, 120, 0});
  auto collect = [&](const Iri& pred) {
    std::set<std::string> seen;
    for (const Triple& t :
         data.vehicles.match_triples(TriplePattern{var("v"), Term(pred), var("o")})) {
      seen.insert(t.object().is_iri() ? t.object().iri().text()
                                      : t.object().literal().lexical());
    }
    return seen;
  };
  CHECK(collect(vocab::a_fabricant()).size() == 6);
  CHECK(collect(vocab::couleur()).size() == 6);
  CHECK(collect(vocab::style_vehicule()).size() == 5);
  CHECK(collect(vocab::annee_du_modele()) ==
        std::set<std::string>{"2018", "2019", "2020", "2021"});
}

TEST_CASE("generate: scarcity narrows vehicle pools but not profile pools") {
  GeneratedData data = generate(GeneratorConfig{21, 150, 60, 0.5});
  std::set<std::string> vehicle_brands;
  for (const Triple& t : data.vehicles.match_triples(
           TriplePattern{var("v"), Term(vocab::a_fabricant()), var("o")})) {
    vehicle_brands.insert(t.object().iri().text());
  }
  CHECK(vehicle_brands.size() == 3);  // ceil(6 * 0.5)

  std::set<std::string> profile_brands;
  for (const UserProfile& p : data.profiles) {
    if (p.brand) profile_brands.insert(*p.brand);
  }
  CHECK(profile_brands.size() > 3);

  // The point of the knob: some users end up without any solution.
  std::size_t inconsistent = 0;
  for (const UserProfile& p : data.profiles) {
    RecommendationTask task = RecommendationTask::make(p, CatalogSchema::standard());
    std::set<ConstraintLabel> active;
    for (ConstraintLabel label : p.supplied()) active.insert(label);
    if (solution_count(data.vehicles, task, active) == 0) ++inconsistent;
  }
  CHECK(inconsistent > 0);
}

TEST_CASE("generate: profiles are valid and ranks permute the supplied labels") {
  GeneratedData data = generate(GeneratorConfig{31, 50, 40});
  REQUIRE(data.profiles.size() == 40);
  for (const UserProfile& p : data.profiles) {
    std::set<std::string_view> rank;
    for (ConstraintLabel label : p.preference_rank) rank.insert(label_name(label));
    std::set<std::string_view> supplied;
    for (ConstraintLabel label : p.supplied()) supplied.insert(label_name(label));
    CHECK(rank == supplied);
    if (p.max_budget) CHECK(*p.max_budget > 0);
    if (p.max_mileage) CHECK(*p.max_mileage > 0);
  }
}

TEST_CASE("generate: interactions reference existing users and vehicles") {
  GeneratedData data = generate(GeneratorConfig{41, 30, 12});
  CHECK_FALSE(data.interaction_records.empty());
  for (const InteractionRecord& record : data.interaction_records) {
    CHECK(data.users.contains(
        Triple(Term(record.user), Term(vocab::rdf_type()), Term(vocab::utilisateur()))));
    CHECK(data.vehicles.contains(
        Triple(Term(record.item), Term(vocab::rdf_type()), Term(vocab::automobile()))));
    CHECK(record.kind == "favori");
    CHECK_FALSE(record.context.empty());
    for (const Triple& t : record.context) CHECK(data.interactions.contains(t));
  }
}

TEST_CASE("profile JSON round-trips") {
  GeneratedData data = generate(GeneratorConfig{51, 10, 15});
  std::string text = profiles_to_json(data.profiles);
  std::vector<UserProfile> back = parse_profiles_json(text);
  CHECK(profiles_to_json(back) == text);
}

TEST_CASE("stats") {
  CHECK(stats(Graph{}).triple_count == 0);
  CHECK(stats(Graph{}).class_counts.empty());

  GeneratedData data = generate(GeneratorConfig{61, 80, 10});
  GraphStats s = stats(data.vehicles);
  CHECK(s.triple_count == data.vehicles.size());
  CHECK(s.class_counts.at(vocab::kUvso + "Automobile") == 80);
  CHECK(s.property_counts.at(vocab::kUvso + "couleur") == 80);
}
