#pragma once

#include <set>
#include <string>
#include <vector>

#include "kgrec/recommender.hpp"

namespace kgrec {

// A relaxation set: constraint labels removed from the user's filter
// constraints so that the remaining set admits at least one solution.
struct Diagnosis {
  std::set<ConstraintLabel> removed;
};

// active = supplied - delta. Throws UnknownLabelError when delta names a
// constraint the profile does not supply.
std::set<ConstraintLabel> apply_diagnosis(const RecommendationTask& task,
                                          const std::set<ConstraintLabel>& delta);

// Greedy rank-driven relaxation: removes supplied constraints starting from
// the lowest preference rank until at least one solution exists. The input
// task must be inconsistent under the full constraint set. Throws
// NoDiagnosisError when even removing everything yields zero solutions.
Diagnosis preferred_diagnosis(const Graph& graph, const RecommendationTask& task);

// All minimal diagnoses up to max_size, found by subset enumeration in
// cardinality order. A consistent task yields the single empty diagnosis.
std::vector<Diagnosis> enumerate_minimal_diagnoses(const Graph& graph,
                                                   const RecommendationTask& task,
                                                   std::size_t max_size);

struct DeltaSet {
  std::string name;
  std::set<ConstraintLabel> removed;
};

// Delta_1..Delta_7: the six singletons in label order plus {Color, Brand}.
std::vector<DeltaSet> default_delta_sets();

// Histogram buckets over solution counts. upper_bounds = {0, 5, 10} makes
// buckets 0, 1-5, 6-10, >10.
struct BucketScheme {
  std::vector<long long> upper_bounds;

  static BucketScheme standard();
  static BucketScheme parse(const std::string& spec);  // comma list of bounds

  std::size_t bucket_count() const { return upper_bounds.size() + 1; }
  std::size_t bucket_of(std::size_t count) const;
  std::vector<std::string> labels() const;
};

struct CohortRow {
  std::string name;
  std::set<ConstraintLabel> removed;
  std::vector<std::size_t> bucket_counts;
  double consistency_rate = 0.0;  // fraction of users with >= 1 solution
};

struct CohortReport {
  std::size_t cohort_size = 0;
  BucketScheme buckets;
  std::vector<CohortRow> rows;  // full constraint set first, then delta sets

  std::string to_csv() const;
  std::string to_json() const;
};

// Per user and per delta set, counts solutions with active =
// supplied - (delta ∩ supplied) and buckets the result. The first report
// row is the unrelaxed constraint set.
CohortReport run_cohort_experiment(const Graph& graph, const std::vector<UserProfile>& cohort,
                                   const CatalogSchema& schema,
                                   const std::vector<DeltaSet>& delta_sets,
                                   const BucketScheme& buckets);

}  // namespace kgrec
