#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kgrec/graph.hpp"
#include "kgrec/profile.hpp"

namespace kgrec {

// A user-item interaction with its context triples. Recorded and emitted
// for completeness; the recommendation pipeline does not read them.
struct InteractionRecord {
  Iri user;
  Iri item;
  std::vector<Triple> context;
  std::string kind;
};

struct GeneratorConfig {
  std::uint64_t seed = 42;
  std::size_t n_vehicles = 0;
  std::size_t n_users = 0;
  // 0 keeps the full value pools; larger values shrink the pools the
  // vehicles draw from while profiles keep referencing the full pools,
  // which manufactures users without any consistent recommendation.
  double scarcity = 0.0;
};

struct GeneratedData {
  Graph vehicles;      // item descriptions, one Automobile per vehicle
  Graph users;         // profile triples mirroring the JSON records
  Graph interactions;  // reified interaction statements
  std::vector<UserProfile> profiles;
  std::vector<InteractionRecord> interaction_records;
};

// Deterministic for a fixed config: equal seeds give byte-identical
// serializations. Value pools and supply rates are listed in the README.
GeneratedData generate(const GeneratorConfig& config);

struct GraphStats {
  std::size_t triple_count = 0;
  std::map<std::string, std::size_t> class_counts;     // rdf:type object -> count
  std::map<std::string, std::size_t> property_counts;  // predicate -> count
};

GraphStats stats(const Graph& graph);

std::string stats_to_json(const GraphStats& s);

}  // namespace kgrec
