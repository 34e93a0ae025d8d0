#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>

#include "doctest.h"
#include "kgrec/errors.hpp"
#include "kgrec/rule_engine.hpp"
#include "kgrec/vocab.hpp"
#include "test_support.hpp"

using namespace kgrec;
using namespace kgrec::test;

namespace {

const Date kNow{2022, 3, 1};

Term cls(const std::string& local) { return iri(vocab::kUvso + local); }

Triple type_of(const Term& subject, const Term& type) {
  return Triple(subject, Term(vocab::rdf_type()), type);
}

// Month counter independent of the arithmetic in months_between: advance
// month by month on the same day-of-month and count the steps that stay
// within the reference date. Test dates keep days <= 28 so every month has
// the anchor day.
int month_walk(const Date& from, const Date& to) {
  int months = 0;
  Date cursor = from;
  while (true) {
    Date next = cursor;
    next.month += 1;
    if (next.month > 12) {
      next.month = 1;
      next.year += 1;
    }
    if (to < next) break;
    ++months;
    cursor = next;
  }
  return months;
}

}  // namespace

TEST_CASE("parse_rules: minimal rule") {
  auto rules = parse_rules("r1: P(?x) -> Q(?x) .");
  REQUIRE(rules.size() == 1);
  CHECK(rules[0].id == "r1");
  CHECK(rules[0].body.size() == 1);
  CHECK(rules[0].head.size() == 1);
  const auto& body = std::get<ClassAtom>(rules[0].body[0]);
  CHECK(body.cls.text() == vocab::kUvso + "P");
  CHECK(body.arg == var("x"));
}

TEST_CASE("parse_rules: the long-distance preference rule") {
  std::string text =
      "c_kb2: upo:PréférenceDeVéhicule(?vpu) ∧ upo:aLeTypeDeRoutePréféré(?vpu, ?route) ∧ "
      "sameAs(?route, upo:longDistanceRoute) -> upo:aUnTypeDeVéhiculePréféré(?vpu, upo:SUV) ∧ "
      "upo:aUnTypeDeVéhiculePréféré(?vpu, upo:Crossover) .";
  auto rules = parse_rules(text);
  REQUIRE(rules.size() == 1);
  const Rule& rule = rules[0];
  REQUIRE(rule.body.size() == 3);
  CHECK(std::holds_alternative<ClassAtom>(rule.body[0]));
  CHECK(std::holds_alternative<PropertyAtom>(rule.body[1]));
  CHECK(std::holds_alternative<SameAsAtom>(rule.body[2]));
  REQUIRE(rule.head.size() == 2);
  CHECK(std::get<PropertyAtom>(rule.head[0]).pred.text() ==
        vocab::a_un_type_de_vehicule_prefere().text());
}

TEST_CASE("parse_rules: safety violation names the variable") {
  try {
    parse_rules("bad: P(?x) -> Q(?y) .");
    FAIL("expected safety error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("?y") != std::string::npos);
  }
}

TEST_CASE("parse_rules: head builtins are rejected") {
  CHECK_THROWS_AS(parse_rules("bad: P(?x) -> swrlb:greaterThan(?x, 5) ."), Error);
}

TEST_CASE("parse_rules: duration output counts as bound") {
  std::string text =
      "ok: uvo:dateDeProduction(?a, ?d) ∧ temporal:duration(?m, ?d, \"maintenant\", \"mois\") -> "
      "uvo:ageEnMois(?a, ?m) .";
  auto rules = parse_rules(text);
  REQUIRE(rules.size() == 1);
  auto bound = body_bound_variables(rules[0]);
  CHECK(std::find(bound.begin(), bound.end(), "m") != bound.end());
}

TEST_CASE("parse_rules: '&&' is accepted for the wedge and errors carry positions") {
  auto rules = parse_rules("r: P(?x) && q(?x, 3) -> R(?x) .");
  CHECK(rules[0].body.size() == 2);
  try {
    parse_rules("r: P(?x -> Q(?x) .");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_rules("r: swrlb:between(?x, 1) -> P(?x) ."), ParseError);
  CHECK_THROWS_AS(parse_rules("r: swrlb:greaterThan(?x, 1, 2) -> P(?x) ."), ParseError);
}

TEST_CASE("eval_builtin: comparisons and contains") {
  Binding empty;
  CHECK(eval_builtin(BuiltinCall{BuiltinName::GreaterThan, {ilit(7), ilit(6)}}, empty, kNow)
            .has_value());
  CHECK_FALSE(
      eval_builtin(BuiltinCall{BuiltinName::GreaterThan, {ilit(6), ilit(6)}}, empty, kNow)
          .has_value());
  CHECK(eval_builtin(BuiltinCall{BuiltinName::LessThan, {ilit(5), flit(5.5)}}, empty, kNow)
            .has_value());
  CHECK(eval_builtin(BuiltinCall{BuiltinName::Equal, {ilit(5), flit(5.0)}}, empty, kNow)
            .has_value());
  CHECK(eval_builtin(
            BuiltinCall{BuiltinName::Contains, {slit("berline noire"), slit("noir")}}, empty, kNow)
            .has_value());
  CHECK_FALSE(eval_builtin(BuiltinCall{BuiltinName::Contains, {slit("rouge"), slit("noir")}},
                           empty, kNow)
                  .has_value());

  Binding bound{{"x", ilit(9)}};
  CHECK(eval_builtin(BuiltinCall{BuiltinName::GreaterThan, {var("x"), ilit(6)}}, bound, kNow)
            .has_value());
}

TEST_CASE("eval_builtin: type and binding errors") {
  Binding empty;
  CHECK_THROWS_AS(
      eval_builtin(BuiltinCall{BuiltinName::GreaterThan, {slit("7"), ilit(6)}}, empty, kNow),
      TypeError);
  CHECK_THROWS_AS(
      eval_builtin(BuiltinCall{BuiltinName::Contains, {ilit(3), slit("a")}}, empty, kNow),
      TypeError);
  CHECK_THROWS_AS(
      eval_builtin(BuiltinCall{BuiltinName::GreaterThan, {var("loose"), ilit(6)}}, empty, kNow),
      EvalError);
  CHECK_THROWS_AS(
      eval_builtin(
          BuiltinCall{BuiltinName::Duration, {var("d"), dlit(2018, 1, 15), slit("demain"), slit("mois")}},
          empty, kNow),
      EvalError);
  CHECK_THROWS_AS(
      eval_builtin(
          BuiltinCall{BuiltinName::Duration, {var("d"), slit("2018-01-15"), slit("maintenant"), slit("mois")}},
          empty, kNow),
      TypeError);
}

TEST_CASE("eval_builtin: duration counts whole calendar months") {
  Binding empty;
  auto extended = eval_builtin(
      BuiltinCall{BuiltinName::Duration,
                  {var("d"), dlit(2018, 1, 15), slit("maintenant"), slit("mois")}},
      empty, kNow);
  REQUIRE(extended.has_value());
  CHECK(extended->at("d") == ilit(49));

  // The 49 agrees with an independent month-walking oracle, and feeds the
  // age test of the inspection rule.
  CHECK(month_walk(Date{2018, 1, 15}, kNow) == 49);
  CHECK(eval_builtin(BuiltinCall{BuiltinName::GreaterThan, {var("d"), ilit(48)}}, *extended, kNow)
            .has_value());

  // Ground output position turns duration into a check.
  Binding preset{{"d", ilit(49)}};
  CHECK(eval_builtin(BuiltinCall{BuiltinName::Duration,
                                 {var("d"), dlit(2018, 1, 15), slit("maintenant"), slit("mois")}},
                     preset, kNow)
            .has_value());
  Binding wrong{{"d", ilit(50)}};
  CHECK_FALSE(eval_builtin(BuiltinCall{BuiltinName::Duration,
                                       {var("d"), dlit(2018, 1, 15), slit("maintenant"), slit("mois")}},
                           wrong, kNow)
                  .has_value());
}

TEST_CASE("months_between oracle sweep") {
  TestRng rng(5);
  for (int round = 0; round < 200; ++round) {
    Date from{2015 + static_cast<int>(rng.below(6)), 1 + static_cast<int>(rng.below(12)),
              1 + static_cast<int>(rng.below(28))};
    Date to{from.year + static_cast<int>(rng.below(6)), 1 + static_cast<int>(rng.below(12)),
            1 + static_cast<int>(rng.below(28))};
    if (to < from) std::swap(from, to);
    CHECK(months_between(from, to) == month_walk(from, to));
  }
}

TEST_CASE("apply_rule_once: class atom derives a type triple") {
  Graph g = Graph().insert(type_of(iri("urn:a"), cls("P")));
  auto rules = parse_rules("r: P(?x) -> Q(?x) .");
  auto fresh = apply_rule_once(g, rules[0], kNow);
  REQUIRE(fresh.size() == 1);
  CHECK(fresh[0] == type_of(iri("urn:a"), cls("Q")));

  // Everything derivable already present: nothing new.
  Graph saturated = g.insert(fresh[0]);
  CHECK(apply_rule_once(saturated, rules[0], kNow).empty());
}

TEST_CASE("apply_rule_once: the long-distance rule derives exactly SUV and Crossover") {
  Term pref = iri("urn:pref1");
  Graph g = Graph::from_triples({
      type_of(pref, Term(vocab::preference_de_vehicule())),
      Triple(pref, Term(vocab::a_le_type_de_route_prefere()), Term(vocab::long_distance_route())),
  });
  auto rules = parse_rules_file(std::string(KGREC_DATA_DIR) + "/domain_rules.rules");
  const Rule* c_kb2 = nullptr;
  for (const Rule& r : rules) {
    if (r.id == "c_kb2") c_kb2 = &r;
  }
  REQUIRE(c_kb2 != nullptr);
  auto fresh = apply_rule_once(g, *c_kb2, kNow);
  std::vector<Triple> expected = {
      Triple(pref, Term(vocab::a_un_type_de_vehicule_prefere()), Term(vocab::type_suv())),
      Triple(pref, Term(vocab::a_un_type_de_vehicule_prefere()), Term(vocab::type_crossover())),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(fresh == expected);
}

TEST_CASE("apply_rule_once: sameAs accepts asserted links in either direction") {
  Term pref = iri("urn:pref1");
  Term alias = iri("urn:route_alias");
  auto base = {
      type_of(pref, Term(vocab::preference_de_vehicule())),
      Triple(pref, Term(vocab::a_le_type_de_route_prefere()), alias),
  };
  auto rules = parse_rules(
      "r: upo:PréférenceDeVéhicule(?v) ∧ upo:aLeTypeDeRoutePréféré(?v, ?route) ∧ "
      "sameAs(?route, upo:longDistanceRoute) -> upo:aUnTypeDeVéhiculePréféré(?v, upo:SUV) .");

  Graph without = Graph::from_triples(base);
  CHECK(apply_rule_once(without, rules[0], kNow).empty());

  Graph forward = without.insert(
      Triple(alias, Term(vocab::owl_same_as()), Term(vocab::long_distance_route())));
  CHECK(apply_rule_once(forward, rules[0], kNow).size() == 1);

  Graph backward = without.insert(
      Triple(Term(vocab::long_distance_route()), Term(vocab::owl_same_as()), alias));
  CHECK(apply_rule_once(backward, rules[0], kNow).size() == 1);
}

TEST_CASE("apply_rule_once: builtin errors carry the violating binding") {
  Graph g = Graph().insert(
      Triple(iri("urn:a"), Term(vocab::date_de_production()), slit("not-a-date")));
  auto rules = parse_rules(
      "r: uvo:dateDeProduction(?a, ?d) ∧ temporal:duration(?m, ?d, \"maintenant\", \"mois\") -> "
      "uvo:ageEnMois(?a, ?m) .");
  try {
    apply_rule_once(g, rules[0], kNow);
    FAIL("expected TypeError");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("?d") != std::string::npos);
  }
}

TEST_CASE("saturate: no rules is the identity") {
  TestRng rng(2);
  Graph g = random_graph(rng, 40);
  SaturationResult result = saturate(g, {}, kNow);
  CHECK(result.graph == g);
  CHECK(result.derived.empty());
  CHECK(result.rounds == 0);
}

TEST_CASE("saturate: chains need one round per dependency step") {
  Graph g = Graph().insert(type_of(iri("urn:a"), cls("P")));
  auto rules = parse_rules("r1: P(?x) -> Q(?x) . r2: Q(?x) -> S(?x) .");
  SaturationResult result = saturate(g, rules, kNow);
  CHECK(result.graph.contains(type_of(iri("urn:a"), cls("Q"))));
  CHECK(result.graph.contains(type_of(iri("urn:a"), cls("S"))));
  CHECK(result.rounds == 2);
  CHECK(result.derived.size() == 2);

  // Inflationary bound: rounds never exceed derived triples + 1.
  CHECK(result.rounds <= static_cast<int>(result.derived.size()) + 1);

  CHECK_THROWS_AS(saturate(g, rules, kNow, 1), NonTerminationError);
  CHECK(saturate(g, rules, kNow, 2).graph == result.graph);
}

namespace {

std::vector<Rule> random_rule_set(TestRng& rng) {
  // Class-and-property rules over a small vocabulary, safe by construction.
  std::vector<std::string> classes = {"C0", "C1", "C2", "C3", "C4"};
  std::vector<std::string> props = {"p0", "p1", "p2"};
  std::vector<Rule> rules;
  std::size_t n_rules = 2 + rng.below(5);
  for (std::size_t i = 0; i < n_rules; ++i) {
    Rule rule;
    rule.id = "g" + std::to_string(i);
    bool property_body = rng.below(2) == 0;
    if (property_body) {
      rule.body.push_back(PropertyAtom{Iri(vocab::kUvso + rng.pick(props)), var("x"), var("y")});
      if (rng.below(2) == 0) {
        rule.body.push_back(ClassAtom{Iri(vocab::kUvso + rng.pick(classes)), var("y")});
      }
      bool head_on_y = rng.below(2) == 0;
      rule.head.push_back(
          ClassAtom{Iri(vocab::kUvso + rng.pick(classes)), head_on_y ? var("y") : var("x")});
    } else {
      rule.body.push_back(ClassAtom{Iri(vocab::kUvso + rng.pick(classes)), var("x")});
      if (rng.below(3) == 0) {
        rule.head.push_back(
            PropertyAtom{Iri(vocab::kUvso + rng.pick(props)), var("x"), var("x")});
      } else {
        rule.head.push_back(ClassAtom{Iri(vocab::kUvso + rng.pick(classes)), var("x")});
      }
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

Graph random_fact_graph(TestRng& rng) {
  std::vector<std::string> classes = {"C0", "C1", "C2", "C3", "C4"};
  std::vector<std::string> props = {"p0", "p1", "p2"};
  std::vector<Triple> facts;
  std::size_t n = 5 + rng.below(25);
  for (std::size_t i = 0; i < n; ++i) {
    Term node = iri("urn:n" + std::to_string(rng.below(8)));
    if (rng.below(2) == 0) {
      facts.push_back(Triple(node, Term(vocab::rdf_type()), iri(vocab::kUvso + rng.pick(classes))));
    } else {
      facts.push_back(Triple(node, Term(Iri(vocab::kUvso + rng.pick(props))),
                             iri("urn:n" + std::to_string(rng.below(8)))));
    }
  }
  return Graph::from_triples(std::move(facts));
}

}  // namespace

TEST_CASE("saturate: idempotent and monotone on 50 random instances") {
  TestRng rng(77);
  for (int round = 0; round < 50; ++round) {
    Graph g = random_fact_graph(rng);
    std::vector<Rule> rules = random_rule_set(rng);
    SaturationResult once = saturate(g, rules, kNow);
    SaturationResult twice = saturate(once.graph, rules, kNow);
    CHECK(twice.graph == once.graph);
    CHECK(twice.derived.empty());
    for (const Triple& t : g.triples()) CHECK(once.graph.contains(t));
  }
}

TEST_CASE("saturate: rule order does not change the fixpoint") {
  TestRng rng(78);
  for (int round = 0; round < 50; ++round) {
    Graph g = random_fact_graph(rng);
    std::vector<Rule> rules = random_rule_set(rng);
    SaturationResult forward = saturate(g, rules, kNow);
    std::vector<Rule> shuffled = rules;
    rng.shuffle(shuffled);
    SaturationResult permuted = saturate(g, shuffled, kNow);
    CHECK(forward.graph == permuted.graph);
  }
}
