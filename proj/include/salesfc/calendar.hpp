#pragma once

#include <chrono>
#include <compare>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace salesfc {

/// Calendar date, stored as days since the civil epoch. Weeks start on
/// Monday throughout the library; product-relative week indices count
/// from the product's introduction Monday (week 1).
class Date {
 public:
  Date() = default;
  explicit Date(std::chrono::sys_days d) : days_(d) {}
  Date(int year, unsigned month, unsigned day)
      : days_(std::chrono::year_month_day(std::chrono::year(year),
                                          std::chrono::month(month),
                                          std::chrono::day(day))) {}

  static Date parse(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    if (std::sscanf(iso.c_str(), "%d-%d-%d", &y, &m, &d) != 3) {
      throw std::invalid_argument("bad ISO date: " + iso);
    }
    Date out(y, static_cast<unsigned>(m), static_cast<unsigned>(d));
    if (!std::chrono::year_month_day(out.days_).ok()) {
      throw std::invalid_argument("invalid calendar date: " + iso);
    }
    return out;
  }

  std::string to_string() const {
    auto ymd = std::chrono::year_month_day(days_);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
  }

  /// Monday = 0 ... Sunday = 6.
  int weekday() const {
    auto wd = std::chrono::weekday(days_);
    return static_cast<int>(wd.iso_encoding()) - 1;
  }

  int day_of_month() const { return static_cast<int>(unsigned(std::chrono::year_month_day(days_).day())); }
  int month() const { return static_cast<int>(unsigned(std::chrono::year_month_day(days_).month())); }
  int year() const { return int(std::chrono::year_month_day(days_).year()); }

  Date plus_days(int n) const { return Date(days_ + std::chrono::days(n)); }
  int days_until(Date other) const { return static_cast<int>((other.days_ - days_).count()); }

  /// Monday of the week containing this date.
  Date week_start() const { return plus_days(-weekday()); }

  /// ISO-8601 week-of-year number (1..53).
  int iso_week_of_year() const {
    Date thursday = plus_days(3 - weekday());
    Date jan1(thursday.year(), 1, 1);
    return jan1.days_until(thursday) / 7 + 1;
  }

  std::chrono::sys_days sys() const { return days_; }
  auto operator<=>(const Date&) const = default;

 private:
  std::chrono::sys_days days_{};
};

/// Week index of `d` relative to an introduction Monday (week 1 = the
/// introduction week). Dates before the anchor get indices <= 0.
inline int week_index(Date d, Date intro_monday) {
  int diff = intro_monday.days_until(d);
  return diff >= 0 ? diff / 7 + 1 : -((-diff + 6) / 7) + 1;
}

/// Monday of product-relative week `w`.
inline Date week_monday(int w, Date intro_monday) {
  return intro_monday.plus_days((w - 1) * 7);
}

/// Gregorian Easter Sunday (anonymous Gregorian algorithm).
inline Date easter_sunday(int year) {
  int a = year % 19;
  int b = year / 100, c = year % 100;
  int d = b / 4, e = b % 4;
  int f = (b + 8) / 25;
  int g = (b - f + 1) / 3;
  int h = (19 * a + b - d - g + 15) % 30;
  int i = c / 4, k = c % 4;
  int l = (32 + 2 * e + 2 * i - h - k) % 7;
  int m = (a + 11 * h + 22 * l) / 451;
  int month = (h + l - 7 * m + 114) / 31;
  int day = ((h + l - 7 * m + 114) % 31) + 1;
  return Date(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
}

}  // namespace salesfc
