#include "sangraph/date.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

#include "sangraph/errors.hpp"

namespace sangraph {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Date Date::from_ymd(int year, int month, int day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{static_cast<unsigned>(month)},
                                        std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    throw MalformedDate(std::string("invalid calendar date: ") + buf);
  }
  const std::chrono::sys_days sd{ymd};
  return from_days(static_cast<std::int32_t>(sd.time_since_epoch().count()));
}

std::optional<Date> Date::try_parse(std::string_view text) {
  // Strict YYYY-MM-DD, zero padded.
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  const std::string_view y = text.substr(0, 4);
  const std::string_view m = text.substr(5, 2);
  const std::string_view d = text.substr(8, 2);
  if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return std::nullopt;
  const std::chrono::year_month_day ymd{
      std::chrono::year{to_int(y)}, std::chrono::month{static_cast<unsigned>(to_int(m))},
      std::chrono::day{static_cast<unsigned>(to_int(d))}};
  if (!ymd.ok()) return std::nullopt;
  const std::chrono::sys_days sd{ymd};
  return from_days(static_cast<std::int32_t>(sd.time_since_epoch().count()));
}

Date Date::parse(std::string_view text) {
  if (auto d = try_parse(text)) return *d;
  throw MalformedDate("unparseable date: \"" + std::string(text) + "\" (expected YYYY-MM-DD)");
}

int Date::year() const {
  const std::chrono::sys_days sd{std::chrono::days{days_}};
  const std::chrono::year_month_day ymd{sd};
  return static_cast<int>(ymd.year());
}

std::string Date::to_string() const {
  const std::chrono::sys_days sd{std::chrono::days{days_}};
  const std::chrono::year_month_day ymd{sd};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace sangraph
