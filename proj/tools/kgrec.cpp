#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kgrec/dataset.hpp"
#include "kgrec/diagnosis.hpp"
#include "kgrec/errors.hpp"
#include "kgrec/ntriples.hpp"
#include "kgrec/query_eval.hpp"
#include "kgrec/recommender.hpp"
#include "kgrec/rule_engine.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit codes shared with the test suites.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitNoDiagnosis = 4;
constexpr int kExitNonTermination = 5;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw kgrec::Error("cannot open " + out_path + " for writing");
  out << text;
}

kgrec::Graph load_graphs(const std::vector<std::string>& paths) {
  kgrec::Graph graph;
  for (const std::string& path : paths) {
    kgrec::Graph next = kgrec::load_ntriples_file(path);
    graph = graph.insert_all(next.triples());
  }
  return graph;
}

kgrec::Date parse_now(const std::string& text) {
  auto d = kgrec::parse_date(text);
  if (!d) throw kgrec::Error("--now must be a YYYY-MM-DD date, got '" + text + "'");
  return *d;
}

kgrec::UserProfile find_profile(const std::vector<kgrec::UserProfile>& profiles,
                                const std::string& user_id) {
  for (const kgrec::UserProfile& p : profiles) {
    if (p.user_id == user_id) return p;
  }
  throw kgrec::Error("unknown user_id " + user_id);
}

std::vector<kgrec::DeltaSet> load_delta_sets(const std::string& path) {
  if (path.empty()) return kgrec::default_delta_sets();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kgrec::Error("cannot open " + path);
  json doc = json::parse(in);
  std::vector<kgrec::DeltaSet> sets;
  for (const json& entry : doc) {
    kgrec::DeltaSet set;
    set.name = entry.at("name").get<std::string>();
    for (const json& name : entry.at("remove")) {
      auto label = kgrec::label_from_name(name.get<std::string>());
      if (!label) throw kgrec::Error("unknown constraint label " + name.dump());
      set.removed.insert(*label);
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

int cmd_generate(std::uint64_t seed, std::size_t vehicles, std::size_t users, double scarcity,
                 const std::string& out_dir) {
  kgrec::GeneratorConfig config{seed, vehicles, users, scarcity};
  kgrec::GeneratedData data = kgrec::generate(config);
  fs::create_directories(out_dir);
  kgrec::write_ntriples_file(data.vehicles, out_dir + "/vehicles.nt");
  kgrec::write_ntriples_file(data.users, out_dir + "/users.nt");
  kgrec::write_ntriples_file(data.interactions, out_dir + "/interactions.nt");
  std::ofstream profiles(out_dir + "/profiles.json", std::ios::binary);
  profiles << kgrec::profiles_to_json(data.profiles);
  std::cout << kgrec::stats_to_json(kgrec::stats(data.vehicles));
  return kExitOk;
}

int cmd_load(const std::vector<std::string>& graph_paths, const std::string& out_path) {
  kgrec::Graph graph = load_graphs(graph_paths);
  std::cout << kgrec::stats_to_json(kgrec::stats(graph));
  if (!out_path.empty()) kgrec::write_ntriples_file(graph, out_path);
  return kExitOk;
}

int cmd_infer(const std::vector<std::string>& graph_paths, const std::string& rules_path,
              const std::string& now, int max_rounds, const std::string& out_path,
              const std::string& format) {
  kgrec::Graph graph = load_graphs(graph_paths);
  std::vector<kgrec::Rule> rules =
      rules_path.empty() ? std::vector<kgrec::Rule>{} : kgrec::parse_rules_file(rules_path);
  kgrec::SaturationResult result = kgrec::saturate(graph, rules, parse_now(now), max_rounds);
  if (!out_path.empty()) kgrec::write_ntriples_file(result.graph, out_path);

  if (format == "json") {
    json report;
    report["derived_count"] = result.derived.size();
    report["rounds"] = result.rounds;
    json derived = json::array();
    for (const kgrec::Triple& t : result.derived) derived.push_back(kgrec::to_string(t));
    report["derived"] = std::move(derived);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "derived " << result.derived.size() << " triples in " << result.rounds
              << " rounds\n";
    for (const kgrec::Triple& t : result.derived) std::cout << kgrec::to_string(t) << "\n";
  }
  return kExitOk;
}

int cmd_query(const std::vector<std::string>& graph_paths, const std::string& query_path,
              const std::string& format, const std::string& out_path) {
  kgrec::Graph graph = load_graphs(graph_paths);
  kgrec::Query query = kgrec::parse_query_file(query_path);
  kgrec::QueryResult result = kgrec::execute(graph, query);
  if (format == "csv") {
    emit(kgrec::solutions_to_csv(result.solutions, query.select_vars), out_path);
  } else {
    emit(kgrec::solutions_to_json(result.solutions, query.select_vars), out_path);
  }
  return kExitOk;
}

int cmd_recommend(const std::vector<std::string>& graph_paths, const std::string& profiles_path,
                  const std::string& user_id, std::size_t limit, const std::string& out_path) {
  kgrec::Graph graph = load_graphs(graph_paths);
  kgrec::UserProfile profile = find_profile(kgrec::load_profiles_file(profiles_path), user_id);
  kgrec::RecommendationTask task =
      kgrec::RecommendationTask::make(std::move(profile), kgrec::CatalogSchema::standard());

  std::set<kgrec::ConstraintLabel> active;
  for (kgrec::ConstraintLabel label : task.profile.supplied()) active.insert(label);
  std::size_t count = kgrec::solution_count(graph, task, active);

  json report;
  report["user_id"] = user_id;
  report["count"] = count;
  json items = json::array();
  if (count > 0) {
    for (const kgrec::Iri& item : kgrec::recommend(graph, task, limit))
      items.push_back(item.text());
  }
  report["items"] = std::move(items);
  emit(report.dump(2) + "\n", out_path);
  if (count == 0) {
    std::cerr << "inconsistent task: no solution for user " << user_id << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_diagnose(const std::vector<std::string>& graph_paths, const std::string& profiles_path,
                 const std::string& user_id, bool enumerate, std::size_t max_size,
                 const std::string& out_path) {
  kgrec::Graph graph = load_graphs(graph_paths);
  kgrec::UserProfile profile = find_profile(kgrec::load_profiles_file(profiles_path), user_id);
  kgrec::RecommendationTask task =
      kgrec::RecommendationTask::make(std::move(profile), kgrec::CatalogSchema::standard());

  std::set<kgrec::ConstraintLabel> full;
  for (kgrec::ConstraintLabel label : task.profile.supplied()) full.insert(label);
  std::size_t full_count = kgrec::solution_count(graph, task, full);
  bool consistent = full_count > 0;

  json report;
  report["user_id"] = user_id;
  report["consistent"] = consistent;
  json removed = json::array();
  std::size_t count_after = full_count;
  if (!consistent) {
    kgrec::Diagnosis diagnosis = kgrec::preferred_diagnosis(graph, task);
    for (kgrec::ConstraintLabel label : diagnosis.removed)
      removed.push_back(std::string(kgrec::label_name(label)));
    count_after =
        kgrec::solution_count(graph, task, kgrec::apply_diagnosis(task, diagnosis.removed));
  }
  report["preferred"] = std::move(removed);
  report["count_after"] = count_after;

  if (enumerate) {
    json all = json::array();
    for (const kgrec::Diagnosis& d : kgrec::enumerate_minimal_diagnoses(graph, task, max_size)) {
      json labels = json::array();
      for (kgrec::ConstraintLabel label : d.removed)
        labels.push_back(std::string(kgrec::label_name(label)));
      all.push_back(std::move(labels));
    }
    report["minimal"] = std::move(all);
  }
  emit(report.dump(2) + "\n", out_path);
  return kExitOk;
}

int cmd_experiment(const std::vector<std::string>& graph_paths, const std::string& profiles_path,
                   const std::string& delta_sets_path, const std::string& buckets_spec,
                   const std::string& format, const std::string& out_path) {
  kgrec::Graph graph = load_graphs(graph_paths);
  std::vector<kgrec::UserProfile> cohort = kgrec::load_profiles_file(profiles_path);
  std::vector<kgrec::DeltaSet> delta_sets = load_delta_sets(delta_sets_path);
  kgrec::BucketScheme buckets = buckets_spec.empty() ? kgrec::BucketScheme::standard()
                                                     : kgrec::BucketScheme::parse(buckets_spec);
  kgrec::CohortReport report = kgrec::run_cohort_experiment(
      graph, cohort, kgrec::CatalogSchema::standard(), delta_sets, buckets);
  emit(format == "json" ? report.to_json() : report.to_csv(), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RDF knowledge-graph pipeline: load, infer, query, recommend, diagnose"};
  app.require_subcommand(1);

  std::vector<std::string> graph_paths;
  std::string rules_path, profiles_path, now, out_path, format;
  std::string query_path, user_id, delta_sets_path, buckets_spec, out_dir = ".";
  std::uint64_t seed = 42;
  std::size_t vehicles = 500, users = 50, limit = 10, max_size = 6;
  double scarcity = 0.0;
  int max_rounds = 64;
  bool enumerate = false;

  CLI::App* generate = app.add_subcommand("generate", "emit a seeded synthetic dataset");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--vehicles", vehicles, "number of vehicles");
  generate->add_option("--users", users, "number of user profiles");
  generate->add_option("--scarcity", scarcity, "pool-narrowing knob in [0,1)");
  generate->add_option("--out", out_dir, "output directory")->required();

  CLI::App* load = app.add_subcommand("load", "load N-Triples files and print stats");
  load->add_option("--graph", graph_paths, "N-Triples file (repeatable)")->required();
  load->add_option("--out", out_path, "write the canonical snapshot here");

  CLI::App* infer = app.add_subcommand("infer", "saturate the graph with the rule set");
  infer->add_option("--graph", graph_paths, "N-Triples file (repeatable)")->required();
  infer->add_option("--rules", rules_path, "rule file");
  infer->add_option("--now", now, "reference date YYYY-MM-DD")->required();
  infer->add_option("--max-rounds", max_rounds, "saturation round budget");
  infer->add_option("--out", out_path, "write the saturated snapshot here");
  infer->add_option("--format", format, "text|json");

  CLI::App* query = app.add_subcommand("query", "run a constraint query");
  query->add_option("--graph", graph_paths, "N-Triples file (repeatable)")->required();
  query->add_option("--query", query_path, "query file")->required();
  query->add_option("--format", format, "json|csv");
  query->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* recommend = app.add_subcommand("recommend", "recommend items for one user");
  recommend->add_option("--graph", graph_paths, "saturated N-Triples file (repeatable)")
      ->required();
  recommend->add_option("--profiles", profiles_path, "profiles JSON")->required();
  recommend->add_option("--user", user_id, "user id")->required();
  recommend->add_option("--limit", limit, "max items");
  recommend->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* diagnose = app.add_subcommand("diagnose", "relax an inconsistent preference set");
  diagnose->add_option("--graph", graph_paths, "saturated N-Triples file (repeatable)")
      ->required();
  diagnose->add_option("--profiles", profiles_path, "profiles JSON")->required();
  diagnose->add_option("--user", user_id, "user id")->required();
  diagnose->add_flag("--enumerate", enumerate, "also enumerate minimal diagnoses");
  diagnose->add_option("--max-size", max_size, "max diagnosis size for --enumerate");
  diagnose->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* experiment = app.add_subcommand("experiment", "cohort solution-count histograms");
  experiment->add_option("--graph", graph_paths, "saturated N-Triples file (repeatable)")
      ->required();
  experiment->add_option("--profiles", profiles_path, "profiles JSON")->required();
  experiment->add_option("--delta-sets", delta_sets_path, "JSON delta-set definitions");
  experiment->add_option("--buckets", buckets_spec, "bucket bounds, e.g. 0,5,10");
  experiment->add_option("--format", format, "csv|json");
  experiment->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(seed, vehicles, users, scarcity, out_dir);
    if (load->parsed()) return cmd_load(graph_paths, out_path);
    if (infer->parsed())
      return cmd_infer(graph_paths, rules_path, now, max_rounds, out_path, format);
    if (query->parsed()) return cmd_query(graph_paths, query_path, format, out_path);
    if (recommend->parsed())
      return cmd_recommend(graph_paths, profiles_path, user_id, limit, out_path);
    if (diagnose->parsed())
      return cmd_diagnose(graph_paths, profiles_path, user_id, enumerate, max_size, out_path);
    if (experiment->parsed())
      return cmd_experiment(graph_paths, profiles_path, delta_sets_path, buckets_spec, format,
                            out_path);
  } catch (const kgrec::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const kgrec::InconsistentTaskError& e) {
    std::cerr << e.what() << "\n";
    return kExitInconsistent;
  } catch (const kgrec::NoDiagnosisError& e) {
    std::cerr << e.what() << "\n";
    return kExitNoDiagnosis;
  } catch (const kgrec::NonTerminationError& e) {
    std::cerr << e.what() << "\n";
    return kExitNonTermination;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
