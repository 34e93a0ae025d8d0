#include "kgrec/profile.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kgrec/errors.hpp"

namespace kgrec {

std::string_view label_name(ConstraintLabel label) {
  switch (label) {
    case ConstraintLabel::Seats: return "Seats";
    case ConstraintLabel::VehicleType: return "VehicleType";
    case ConstraintLabel::Brand: return "Brand";
    case ConstraintLabel::Color: return "Color";
    case ConstraintLabel::Mileage: return "Mileage";
    case ConstraintLabel::Price: return "Price";
  }
  return "";
}

std::optional<ConstraintLabel> label_from_name(std::string_view name) {
  for (ConstraintLabel label : all_labels()) {
    if (label_name(label) == name) return label;
  }
  return std::nullopt;
}

std::vector<ConstraintLabel> all_labels() {
  return {ConstraintLabel::Seats,  ConstraintLabel::VehicleType, ConstraintLabel::Brand,
          ConstraintLabel::Color,  ConstraintLabel::Mileage,     ConstraintLabel::Price};
}

bool UserProfile::supplies(ConstraintLabel label) const {
  switch (label) {
    case ConstraintLabel::Seats: return seats.has_value();
    case ConstraintLabel::VehicleType: return vehicle_type.has_value();
    case ConstraintLabel::Brand: return brand.has_value();
    case ConstraintLabel::Color: return !colors.empty();
    case ConstraintLabel::Mileage: return max_mileage.has_value();
    case ConstraintLabel::Price: return max_budget.has_value();
  }
  return false;
}

std::vector<ConstraintLabel> UserProfile::supplied() const {
  std::vector<ConstraintLabel> out;
  for (ConstraintLabel label : all_labels()) {
    if (supplies(label)) out.push_back(label);
  }
  return out;
}

void UserProfile::validate_and_normalize() {
  if (user_id.empty()) throw Error("profile without user_id");
  auto positive = [&](const std::optional<long long>& v, const char* what) {
    if (v && *v <= 0)
      throw Error("profile " + user_id + ": " + what + " must be positive");
  };
  positive(seats, "seats");
  positive(max_mileage, "max_mileage");
  positive(max_budget, "max_budget");
  positive(min_budget, "min_budget");

  std::vector<ConstraintLabel> have = supplied();
  if (preference_rank.empty()) {
    preference_rank = have;
    return;
  }
  std::set<std::string_view> rank_set;
  for (ConstraintLabel label : preference_rank) rank_set.insert(label_name(label));
  if (rank_set.size() != preference_rank.size())
    throw Error("profile " + user_id + ": duplicate label in preference_rank");
  std::set<std::string_view> have_set;
  for (ConstraintLabel label : have) have_set.insert(label_name(label));
  if (rank_set != have_set)
    throw Error("profile " + user_id +
                ": preference_rank must be a permutation of the supplied constraints");
}

namespace {

using nlohmann::json;

UserProfile profile_from_json(const json& record) {
  UserProfile p;
  p.user_id = record.value("user_id", "");
  if (record.contains("vehicle_type")) p.vehicle_type = record.at("vehicle_type").get<std::string>();
  if (record.contains("colors")) p.colors = record.at("colors").get<std::vector<std::string>>();
  if (record.contains("profil")) p.profil = record.at("profil").get<std::string>();
  if (record.contains("seats")) p.seats = record.at("seats").get<long long>();
  if (record.contains("max_mileage")) p.max_mileage = record.at("max_mileage").get<long long>();
  if (record.contains("brand")) p.brand = record.at("brand").get<std::string>();
  if (record.contains("max_budget")) p.max_budget = record.at("max_budget").get<long long>();
  if (record.contains("min_budget")) p.min_budget = record.at("min_budget").get<long long>();
  if (record.contains("route_preference"))
    p.route_preference = record.at("route_preference").get<std::string>();
  if (record.contains("preference_rank")) {
    for (const auto& name : record.at("preference_rank")) {
      auto label = label_from_name(name.get<std::string>());
      if (!label)
        throw Error("profile " + p.user_id + ": unknown constraint label " + name.dump());
      p.preference_rank.push_back(*label);
    }
  }
  p.validate_and_normalize();
  return p;
}

json profile_to_json(const UserProfile& p) {
  json record;
  record["user_id"] = p.user_id;
  if (p.vehicle_type) record["vehicle_type"] = *p.vehicle_type;
  if (!p.colors.empty()) record["colors"] = p.colors;
  if (p.profil) record["profil"] = *p.profil;
  if (p.seats) record["seats"] = *p.seats;
  if (p.max_mileage) record["max_mileage"] = *p.max_mileage;
  if (p.brand) record["brand"] = *p.brand;
  if (p.max_budget) record["max_budget"] = *p.max_budget;
  if (p.min_budget) record["min_budget"] = *p.min_budget;
  if (p.route_preference) record["route_preference"] = *p.route_preference;
  json rank = json::array();
  for (ConstraintLabel label : p.preference_rank) rank.push_back(std::string(label_name(label)));
  record["preference_rank"] = std::move(rank);
  return record;
}

}  // namespace

std::vector<UserProfile> parse_profiles_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1);
  }
  if (!doc.is_array()) throw ParseError("profiles file must be a JSON array", 1);
  std::vector<UserProfile> profiles;
  for (const json& record : doc) profiles.push_back(profile_from_json(record));
  return profiles;
}

std::vector<UserProfile> load_profiles_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profiles_json(buf.str());
}

std::string profiles_to_json(const std::vector<UserProfile>& profiles) {
  json doc = json::array();
  for (const UserProfile& p : profiles) doc.push_back(profile_to_json(p));
  return doc.dump(2) + "\n";
}

}  // namespace kgrec
