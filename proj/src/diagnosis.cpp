#include "kgrec/diagnosis.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "kgrec/errors.hpp"

namespace kgrec {

std::set<ConstraintLabel> apply_diagnosis(const RecommendationTask& task,
                                          const std::set<ConstraintLabel>& delta) {
  std::set<ConstraintLabel> supplied;
  for (ConstraintLabel label : task.profile.supplied()) supplied.insert(label);
  for (ConstraintLabel label : delta) {
    if (!supplied.contains(label))
      throw UnknownLabelError("profile " + task.profile.user_id + " does not supply " +
                              std::string(label_name(label)));
  }
  std::set<ConstraintLabel> active;
  for (ConstraintLabel label : supplied) {
    if (!delta.contains(label)) active.insert(label);
  }
  return active;
}

Diagnosis preferred_diagnosis(const Graph& graph, const RecommendationTask& task) {
  std::set<ConstraintLabel> active;
  for (ConstraintLabel label : task.profile.supplied()) active.insert(label);
  if (solution_count(graph, task, active) > 0)
    throw std::logic_error("preferred_diagnosis requires an inconsistent task (user " +
                           task.profile.user_id + ")");

  Diagnosis diagnosis;
  const std::vector<ConstraintLabel>& rank = task.profile.preference_rank;
  for (auto it = rank.rbegin(); it != rank.rend(); ++it) {
    diagnosis.removed.insert(*it);
    active.erase(*it);
    if (solution_count(graph, task, active) > 0) return diagnosis;
  }
  throw NoDiagnosisError("no diagnosis for user " + task.profile.user_id +
                         ": even the unconstrained query has no solution");
}

std::vector<Diagnosis> enumerate_minimal_diagnoses(const Graph& graph,
                                                   const RecommendationTask& task,
                                                   std::size_t max_size) {
  std::vector<ConstraintLabel> supplied = task.profile.supplied();
  const std::size_t n = supplied.size();

  auto consistent = [&](const std::set<ConstraintLabel>& delta) {
    std::set<ConstraintLabel> active;
    for (ConstraintLabel label : supplied) {
      if (!delta.contains(label)) active.insert(label);
    }
    return solution_count(graph, task, active) > 0;
  };

  std::vector<Diagnosis> minimal;
  auto contains_known_minimal = [&](const std::set<ConstraintLabel>& delta) {
    for (const Diagnosis& d : minimal) {
      if (std::includes(delta.begin(), delta.end(), d.removed.begin(), d.removed.end()))
        return true;
    }
    return false;
  };

  // Cardinality-ordered subset sweep; relaxation monotonicity makes every
  // consistent set without a smaller consistent subset minimal.
  for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
    std::vector<bool> select(n, false);
    std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(size), true);
    // std::prev_permutation enumerates all positions of `size` trues.
    do {
      std::set<ConstraintLabel> delta;
      for (std::size_t i = 0; i < n; ++i) {
        if (select[i]) delta.insert(supplied[i]);
      }
      if (contains_known_minimal(delta)) continue;
      if (consistent(delta)) minimal.push_back(Diagnosis{std::move(delta)});
    } while (std::prev_permutation(select.begin(), select.end()));
  }
  return minimal;
}

std::vector<DeltaSet> default_delta_sets() {
  return {
      {"delta1", {ConstraintLabel::Seats}},
      {"delta2", {ConstraintLabel::VehicleType}},
      {"delta3", {ConstraintLabel::Brand}},
      {"delta4", {ConstraintLabel::Color}},
      {"delta5", {ConstraintLabel::Mileage}},
      {"delta6", {ConstraintLabel::Price}},
      {"delta7", {ConstraintLabel::Color, ConstraintLabel::Brand}},
  };
}

BucketScheme BucketScheme::standard() { return BucketScheme{{0, 5, 10}}; }

BucketScheme BucketScheme::parse(const std::string& spec) {
  BucketScheme scheme;
  std::stringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t consumed = 0;
    long long bound = std::stoll(part, &consumed);
    if (consumed != part.size()) throw Error("bad bucket bound: " + part);
    scheme.upper_bounds.push_back(bound);
  }
  if (scheme.upper_bounds.empty()) throw Error("bucket scheme needs at least one bound");
  if (!std::is_sorted(scheme.upper_bounds.begin(), scheme.upper_bounds.end()) ||
      std::adjacent_find(scheme.upper_bounds.begin(), scheme.upper_bounds.end()) !=
          scheme.upper_bounds.end())
    throw Error("bucket bounds must be strictly increasing");
  return scheme;
}

std::size_t BucketScheme::bucket_of(std::size_t count) const {
  for (std::size_t i = 0; i < upper_bounds.size(); ++i) {
    if (static_cast<long long>(count) <= upper_bounds[i]) return i;
  }
  return upper_bounds.size();
}

std::vector<std::string> BucketScheme::labels() const {
  std::vector<std::string> out;
  long long previous = -1;
  for (long long bound : upper_bounds) {
    if (bound == previous + 1) {
      out.push_back(std::to_string(bound));
    } else {
      out.push_back(std::to_string(previous + 1) + "-" + std::to_string(bound));
    }
    previous = bound;
  }
  out.push_back(">" + std::to_string(previous));
  return out;
}

namespace {

std::string removed_to_string(const std::set<ConstraintLabel>& removed) {
  std::string out;
  for (ConstraintLabel label : removed) {
    if (!out.empty()) out += "+";
    out += std::string(label_name(label));
  }
  return out;
}

}  // namespace

std::string CohortReport::to_csv() const {
  std::ostringstream out;
  out << "delta_set,removed";
  for (const std::string& label : buckets.labels()) out << ",\"" << label << "\"";
  out << ",consistency_rate\n";
  char rate[32];
  for (const CohortRow& row : rows) {
    out << row.name << ',' << removed_to_string(row.removed);
    for (std::size_t count : row.bucket_counts) out << ',' << count;
    std::snprintf(rate, sizeof(rate), "%.4f", row.consistency_rate);
    out << ',' << rate << '\n';
  }
  return out.str();
}

std::string CohortReport::to_json() const {
  nlohmann::json doc;
  doc["cohort_size"] = cohort_size;
  doc["buckets"] = buckets.labels();
  nlohmann::json rows_json = nlohmann::json::array();
  for (const CohortRow& row : rows) {
    nlohmann::json r;
    r["name"] = row.name;
    nlohmann::json removed = nlohmann::json::array();
    for (ConstraintLabel label : row.removed) removed.push_back(std::string(label_name(label)));
    r["removed"] = std::move(removed);
    r["counts"] = row.bucket_counts;
    r["consistency_rate"] = row.consistency_rate;
    rows_json.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows_json);
  return doc.dump(2) + "\n";
}

CohortReport run_cohort_experiment(const Graph& graph, const std::vector<UserProfile>& cohort,
                                   const CatalogSchema& schema,
                                   const std::vector<DeltaSet>& delta_sets,
                                   const BucketScheme& buckets) {
  CohortReport report;
  report.cohort_size = cohort.size();
  report.buckets = buckets;

  std::vector<RecommendationTask> tasks;
  tasks.reserve(cohort.size());
  for (const UserProfile& profile : cohort) {
    tasks.push_back(RecommendationTask::make(profile, schema));
  }

  std::vector<DeltaSet> all_sets;
  all_sets.push_back(DeltaSet{"full", {}});
  all_sets.insert(all_sets.end(), delta_sets.begin(), delta_sets.end());

  for (const DeltaSet& delta : all_sets) {
    CohortRow row;
    row.name = delta.name;
    row.removed = delta.removed;
    row.bucket_counts.assign(buckets.bucket_count(), 0);
    std::size_t with_solution = 0;
    for (const RecommendationTask& task : tasks) {
      std::set<ConstraintLabel> active;
      for (ConstraintLabel label : task.profile.supplied()) {
        if (!delta.removed.contains(label)) active.insert(label);
      }
      std::size_t count = solution_count(graph, task, active);
      row.bucket_counts[buckets.bucket_of(count)] += 1;
      if (count > 0) ++with_solution;
    }
    row.consistency_rate =
        cohort.empty() ? 0.0 : static_cast<double>(with_solution) / static_cast<double>(cohort.size());
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace kgrec
