#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kgrec {

// The six user-side preference constraints.
enum class ConstraintLabel { Seats, VehicleType, Brand, Color, Mileage, Price };

inline constexpr int kConstraintLabelCount = 6;

std::string_view label_name(ConstraintLabel label);
std::optional<ConstraintLabel> label_from_name(std::string_view name);
std::vector<ConstraintLabel> all_labels();

// A user's preference record. Every preference field is optional; the rank
// orders the supplied constraints from most to least preferred.
struct UserProfile {
  std::string user_id;
  std::optional<std::string> vehicle_type;  // style local name, e.g. "berline_occasion"
  std::vector<std::string> colors;          // allowed colors; empty = not supplied
  std::optional<std::string> profil;        // e.g. "utilisateurParent"
  std::optional<long long> seats;
  std::optional<long long> max_mileage;
  std::optional<std::string> brand;
  std::optional<long long> max_budget;
  std::optional<long long> min_budget;      // optional lower price bound
  std::optional<std::string> route_preference;  // e.g. "longDistanceRoute"
  std::vector<ConstraintLabel> preference_rank;

  bool supplies(ConstraintLabel label) const;
  std::vector<ConstraintLabel> supplied() const;

  // Checks positivity of numeric values and that the rank is a permutation
  // of the supplied labels; fills a default rank when none was given.
  void validate_and_normalize();
};

// Parses a JSON array of profile records.
std::vector<UserProfile> parse_profiles_json(const std::string& text);
std::vector<UserProfile> load_profiles_file(const std::string& path);
std::string profiles_to_json(const std::vector<UserProfile>& profiles);

}  // namespace kgrec
