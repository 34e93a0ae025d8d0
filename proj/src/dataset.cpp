#include "kgrec/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "kgrec/errors.hpp"
#include "kgrec/vocab.hpp"

namespace kgrec {

namespace {

// Engine-stable sampling on top of mt19937_64: the standard library
// distributions are implementation-defined, the raw engine stream is not.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  // Weighted pick over the first `limit` entries of a pool.
  template <typename T>
  const T& pick(const std::vector<std::pair<T, int>>& pool, std::size_t limit) {
    limit = std::min(limit, pool.size());
    long long total = 0;
    for (std::size_t i = 0; i < limit; ++i) total += pool[i].second;
    long long roll = static_cast<long long>(below(static_cast<std::uint64_t>(total)));
    for (std::size_t i = 0; i < limit; ++i) {
      roll -= pool[i].second;
      if (roll < 0) return pool[i].first;
    }
    return pool[limit - 1].first;
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }
};

const std::vector<std::pair<std::string, int>>& brand_pool() {
  static const std::vector<std::pair<std::string, int>> kPool = {
      {"peugeot", 22}, {"renault", 20}, {"citroen", 18},
      {"audi", 15},    {"volkswagen", 13}, {"toyota", 12},
  };
  return kPool;
}

const std::vector<std::pair<std::string, int>>& color_pool() {
  static const std::vector<std::pair<std::string, int>> kPool = {
      {"noir", 28}, {"blanc", 24}, {"gris", 18}, {"bleu", 12}, {"rouge", 10}, {"vert", 8},
  };
  return kPool;
}

const std::vector<std::pair<std::string, int>>& style_pool() {
  static const std::vector<std::pair<std::string, int>> kPool = {
      {"berline_occasion", 34},   {"suv_occasion", 24},       {"crossover_occasion", 16},
      {"citadine_occasion", 16},  {"monospace_occasion", 10},
  };
  return kPool;
}

const std::vector<std::pair<long long, int>>& seat_pool() {
  static const std::vector<std::pair<long long, int>> kPool = {{5, 65}, {7, 20}, {4, 15}};
  return kPool;
}

const std::map<std::string, std::vector<std::string>>& model_names() {
  static const std::map<std::string, std::vector<std::string>> kModels = {
      {"peugeot", {"208", "308", "3008"}},   {"renault", {"Clio", "Megane", "Captur"}},
      {"citroen", {"C3", "C4", "Berlingo"}}, {"audi", {"A3", "A4", "Q3"}},
      {"volkswagen", {"Golf", "Polo", "Tiguan"}}, {"toyota", {"Yaris", "Corolla", "RAV4"}},
  };
  return kModels;
}

std::size_t pool_limit(std::size_t full, double scarcity) {
  double keep = 1.0 - scarcity;
  auto limit = static_cast<std::size_t>(std::ceil(static_cast<double>(full) * keep));
  return std::max<std::size_t>(1, std::min(full, limit));
}

std::string pad_id(const char* prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s_%04zu", prefix, n);
  return buf;
}

}  // namespace

GeneratedData generate(const GeneratorConfig& config) {
  if (config.scarcity < 0.0 || config.scarcity >= 1.0)
    throw Error("scarcity must be in [0, 1)");
  Rng rng(config.seed);
  GeneratedData data;

  const Term type_pred(vocab::rdf_type());
  std::vector<Triple> vehicle_triples;
  std::vector<Iri> vehicle_iris;

  const std::size_t brand_limit = pool_limit(brand_pool().size(), config.scarcity);
  const std::size_t color_limit = pool_limit(color_pool().size(), config.scarcity);
  const std::size_t style_limit = pool_limit(style_pool().size(), config.scarcity);

  for (std::size_t i = 1; i <= config.n_vehicles; ++i) {
    Iri vehicle(vocab::kUvd + pad_id("vehicule", i));
    vehicle_iris.push_back(vehicle);
    Term v(vehicle);

    const std::string& brand = rng.pick(brand_pool(), brand_limit);
    const std::string& color = rng.pick(color_pool(), color_limit);
    const std::string& style = rng.pick(style_pool(), style_limit);
    long long seats = rng.pick(seat_pool(), seat_pool().size());
    long long year = rng.range(2018, 2021);
    long long price = rng.range(180, 1200) * 50;        // 9 000 .. 60 000
    double mileage = static_cast<double>(rng.range(50, 1800)) * 100.0 +
                     static_cast<double>(rng.below(10)) / 10.0;  // 5 000.0 .. 180 000.9

    const auto& models = model_names().at(brand);
    std::string name = brand;
    name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    name += " " + models[rng.below(models.size())] + " " + std::to_string(year);

    vehicle_triples.emplace_back(v, type_pred, Term(vocab::automobile()));
    vehicle_triples.emplace_back(v, Term(vocab::nom()), Term(Literal::string(name)));
    vehicle_triples.emplace_back(v, Term(vocab::couleur()), Term(Literal::string(color)));
    vehicle_triples.emplace_back(v, Term(vocab::a_fabricant()),
                                 Term(Iri(vocab::kUvso + "fabricant_" + brand)));
    vehicle_triples.emplace_back(v, Term(vocab::style_vehicule()),
                                 Term(Iri(vocab::kUvso + style)));
    vehicle_triples.emplace_back(v, Term(vocab::annee_du_modele()),
                                 Term(Literal::integer(year)));

    Iri seats_node(vocab::kUvd + pad_id("places", i));
    vehicle_triples.emplace_back(v, Term(vocab::nombre_de_places()), Term(seats_node));
    vehicle_triples.emplace_back(Term(seats_node), Term(vocab::a_valeur_entier()),
                                 Term(Literal::integer(seats)));

    Iri mileage_node(vocab::kUvd + pad_id("kilometrage", i));
    vehicle_triples.emplace_back(v, Term(vocab::kilometrage_odometre()), Term(mileage_node));
    vehicle_triples.emplace_back(Term(mileage_node), Term(vocab::a_valeur_float()),
                                 Term(Literal::floating(mileage)));

    Iri estimation_node(vocab::kUvd + pad_id("estimation", i));
    vehicle_triples.emplace_back(v, Term(vocab::estimation()), Term(estimation_node));
    vehicle_triples.emplace_back(Term(estimation_node), Term(vocab::a_valeur_monetaire()),
                                 Term(Literal::integer(price)));

    Date production{static_cast<int>(year), static_cast<int>(rng.range(1, 12)),
                    static_cast<int>(rng.range(1, 28))};
    vehicle_triples.emplace_back(v, Term(vocab::date_de_production()),
                                 Term(Literal::date(production)));

    if (rng.chance(0.7)) {
      Iri inspection(vocab::kUvd + pad_id("controle", i));
      Date valid{static_cast<int>(rng.range(2020, 2022)), static_cast<int>(rng.range(1, 12)),
                 static_cast<int>(rng.range(1, 28))};
      vehicle_triples.emplace_back(Term(inspection), type_pred,
                                   Term(vocab::controle_technique()));
      vehicle_triples.emplace_back(v, Term(vocab::inspecte()), Term(inspection));
      vehicle_triples.emplace_back(Term(inspection), Term(vocab::valide_de()),
                                   Term(Literal::date(valid)));
    }
  }
  data.vehicles = Graph::from_triples(std::move(vehicle_triples));

  std::vector<Triple> user_triples;
  for (std::size_t i = 1; i <= config.n_users; ++i) {
    UserProfile p;
    p.user_id = pad_id("user", i);
    if (rng.chance(0.85)) p.max_budget = rng.range(40, 140) * 500;  // 20 000 .. 70 000
    if (p.max_budget && rng.chance(0.15)) p.min_budget = rng.range(16, 30) * 500;
    if (rng.chance(0.70)) p.max_mileage = rng.range(60, 160) * 1000;
    if (rng.chance(0.55)) p.seats = rng.pick(seat_pool(), seat_pool().size());
    if (rng.chance(0.60)) p.vehicle_type = rng.pick(style_pool(), style_pool().size());
    if (rng.chance(0.70)) p.brand = rng.pick(brand_pool(), brand_pool().size());
    if (rng.chance(0.70)) {
      p.colors.push_back(rng.pick(color_pool(), color_pool().size()));
      if (rng.chance(0.4)) {
        const std::string& second = rng.pick(color_pool(), color_pool().size());
        if (second != p.colors.front()) p.colors.push_back(second);
      }
    }
    if (rng.chance(0.5)) {
      static const std::vector<std::string> kProfiles = {
          "utilisateurEtudiant", "utilisateurParent", "profilProfessionnel"};
      p.profil = kProfiles[rng.below(kProfiles.size())];
    }
    if (rng.chance(0.3)) p.route_preference = "longDistanceRoute";

    p.preference_rank = p.supplied();
    rng.shuffle(p.preference_rank);
    p.validate_and_normalize();

    Iri user(vocab::kUvd + p.user_id);
    Iri pref(vocab::kUvd + "pref_" + p.user_id);
    Term u(user), pr(pref);
    user_triples.emplace_back(u, type_pred, Term(vocab::utilisateur()));
    user_triples.emplace_back(u, Term(vocab::a_preference()), pr);
    user_triples.emplace_back(pr, type_pred, Term(vocab::preference_de_vehicule()));
    if (p.route_preference)
      user_triples.emplace_back(pr, Term(vocab::a_le_type_de_route_prefere()),
                                Term(Iri(vocab::kUpo + *p.route_preference)));
    if (p.profil)
      user_triples.emplace_back(pr, Term(vocab::a_le_profil()),
                                Term(Iri(vocab::kUpo + *p.profil)));
    if (p.max_budget)
      user_triples.emplace_back(pr, Term(Iri(vocab::kUpo + "maxBudget")),
                                Term(Literal::integer(*p.max_budget)));
    if (p.max_mileage)
      user_triples.emplace_back(pr, Term(Iri(vocab::kUpo + "maxKilométrage")),
                                Term(Literal::integer(*p.max_mileage)));
    if (p.seats)
      user_triples.emplace_back(pr, Term(Iri(vocab::kUpo + "nombreDeSièges")),
                                Term(Literal::integer(*p.seats)));
    if (p.vehicle_type)
      user_triples.emplace_back(pr, Term(Iri(vocab::kUpo + "typeDeVéhicule")),
                                Term(Iri(vocab::kUvso + *p.vehicle_type)));
    if (p.brand)
      user_triples.emplace_back(pr, Term(Iri(vocab::kUpo + "marque")),
                                Term(Literal::string(*p.brand)));
    for (const std::string& color : p.colors)
      user_triples.emplace_back(pr, Term(Iri(vocab::kUpo + "couleur")),
                                Term(Literal::string(color)));

    data.profiles.push_back(std::move(p));
  }
  data.users = Graph::from_triples(std::move(user_triples));

  // A couple of favorites per user, context = interaction date.
  std::vector<Triple> interaction_triples;
  if (!vehicle_iris.empty()) {
    std::size_t counter = 0;
    for (const UserProfile& p : data.profiles) {
      std::size_t picks = 1 + rng.below(2);
      for (std::size_t j = 0; j < picks; ++j) {
        ++counter;
        InteractionRecord record{Iri(vocab::kUvd + p.user_id),
                                 vehicle_iris[rng.below(vehicle_iris.size())],
                                 {},
                                 "favori"};
        Iri node(vocab::kUvd + pad_id("interaction", counter));
        Date when{2022, static_cast<int>(rng.range(1, 12)), static_cast<int>(rng.range(1, 28))};
        Term n(node);
        interaction_triples.emplace_back(n, type_pred, Term(vocab::interaction()));
        interaction_triples.emplace_back(n, Term(vocab::par_utilisateur()), Term(record.user));
        interaction_triples.emplace_back(n, Term(vocab::sur_vehicule()), Term(record.item));
        interaction_triples.emplace_back(n, Term(vocab::genre_interaction()),
                                         Term(Literal::string(record.kind)));
        Triple context_triple(n, Term(vocab::date_interaction()), Term(Literal::date(when)));
        record.context.push_back(context_triple);
        interaction_triples.push_back(context_triple);
        data.interaction_records.push_back(std::move(record));
      }
    }
  }
  data.interactions = Graph::from_triples(std::move(interaction_triples));
  return data;
}

GraphStats stats(const Graph& graph) {
  GraphStats s;
  s.triple_count = graph.size();
  for (const Triple& t : graph.triples()) {
    s.property_counts[t.predicate().iri().text()] += 1;
    if (t.predicate().iri() == vocab::rdf_type() && t.object().is_iri()) {
      s.class_counts[t.object().iri().text()] += 1;
    }
  }
  return s;
}

std::string stats_to_json(const GraphStats& s) {
  nlohmann::json doc;
  doc["triple_count"] = s.triple_count;
  doc["class_counts"] = s.class_counts;
  doc["property_counts"] = s.property_counts;
  return doc.dump(2) + "\n";
}

}  // namespace kgrec
