#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sangraph {

// Day-precision calendar date, stored as days since 1970-01-01.
// All temporal comparisons in the library happen at day granularity.
class Date {
 public:
  Date() = default;

  static Date from_days(std::int32_t days) {
    Date d;
    d.days_ = days;
    return d;
  }

  // Throws MalformedDate on impossible calendar dates (e.g. Feb 30).
  static Date from_ymd(int year, int month, int day);

  // Strict "YYYY-MM-DD". Throws MalformedDate.
  static Date parse(std::string_view text);
  static std::optional<Date> try_parse(std::string_view text);

  std::int32_t days() const { return days_; }
  int year() const;
  std::string to_string() const;  // "YYYY-MM-DD"

  static Date year_start(int year) { return from_ymd(year, 1, 1); }
  static Date year_end(int year) { return from_ymd(year, 12, 31); }

  Date plus_days(int n) const { return from_days(days_ + n); }

  friend int operator-(Date a, Date b) { return a.days_ - b.days_; }
  auto operator<=>(const Date&) const = default;

 private:
  std::int32_t days_ = 0;
};

}  // namespace sangraph
