#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace kgrec {

// Proleptic Gregorian calendar date, used for xsd:date literals and the
// temporal duration builtin.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;
};

bool is_valid_date(int year, int month, int day);

// Accepts strictly YYYY-MM-DD.
std::optional<Date> parse_date(std::string_view text);

std::string format_date(const Date& d);

// Whole calendar months elapsed from `from` to `to` (floor). A span of
// 2018-01-15 .. 2022-03-01 counts 49 months: the 50th month is not complete.
int months_between(const Date& from, const Date& to);

}  // namespace kgrec
