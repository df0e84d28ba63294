#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "salesfc/calendar.hpp"
#include "salesfc/csv.hpp"

namespace salesfc {

using json = nlohmann::json;

/// One observation of units sold for a product at (store, date, hour).
struct SalesRecord {
  std::string product_id;
  int store_id = 0;
  Date date;
  int hour = 0;
  double units = 0.0;
};

struct PromoWeek {
  int week = 0;  // product-relative week index
  double promo_price = 0.0;
};

struct ProductMeta {
  std::string product_id;
  double base_price = 0.0;
  Date intro_monday;  // anchor for product-relative week indices
  std::vector<PromoWeek> promo_calendar;
  std::string subgroup;

  bool is_promo_week(int week) const {
    for (const auto& p : promo_calendar)
      if (p.week == week) return true;
    return false;
  }

  double price_in_week(int week) const {
    for (const auto& p : promo_calendar)
      if (p.week == week) return p.promo_price;
    return base_price;
  }

  void validate() const {
    for (const auto& p : promo_calendar) {
      if (!(p.promo_price < base_price) || p.promo_price <= 0.0) {
        throw std::invalid_argument("product " + product_id + ": promo price " +
                                    format_double(p.promo_price) +
                                    " must be positive and below base price in week " +
                                    std::to_string(p.week));
      }
    }
  }
};

struct OpeningHours {
  int first_hour = 0;  // inclusive
  int last_hour = 0;   // exclusive
};

struct StoreMeta {
  int store_id = 0;
  int state = 0;  // region code
  // One entry per weekday (Monday = 0); nullopt means closed.
  std::array<std::optional<OpeningHours>, 7> opening_hours;

  bool open_at(int weekday, int hour) const {
    const auto& oh = opening_hours[static_cast<std::size_t>(weekday)];
    return oh && hour >= oh->first_hour && hour < oh->last_hour;
  }

  int hours_open(int weekday) const {
    const auto& oh = opening_hours[static_cast<std::size_t>(weekday)];
    return oh ? oh->last_hour - oh->first_hour : 0;
  }

  int hours_open_per_week() const {
    int n = 0;
    for (int d = 0; d < 7; ++d) n += hours_open(d);
    return n;
  }

  void validate() const {
    for (const auto& oh : opening_hours) {
      if (oh && !(oh->first_hour < oh->last_hour)) {
        throw std::invalid_argument("store " + std::to_string(store_id) +
                                    ": first_hour must precede last_hour");
      }
    }
  }
};

struct DateInterval {
  Date start;
  Date end;  // inclusive
};

struct HolidayCalendar {
  std::set<Date> public_holidays;
  std::vector<DateInterval> school_holiday_ranges;

  bool is_public_holiday(Date d) const { return public_holidays.count(d) > 0; }

  bool is_school_holiday(Date d) const {
    for (const auto& iv : school_holiday_ranges)
      if (d >= iv.start && d <= iv.end) return true;
    return false;
  }

  /// Days to the next public holiday on or after d, capped.
  int days_until_public_holiday(Date d, int cap) const {
    auto it = public_holidays.lower_bound(d);
    if (it == public_holidays.end()) return cap;
    return std::min(cap, d.days_until(*it));
  }

  /// Days since the most recent public holiday on or before d, capped.
  int days_since_public_holiday(Date d, int cap) const {
    auto it = public_holidays.upper_bound(d);
    if (it == public_holidays.begin()) return cap;
    return std::min(cap, (--it)->days_until(d));
  }

  void validate() const {
    for (const auto& iv : school_holiday_ranges) {
      if (iv.end < iv.start)
        throw std::invalid_argument("school holiday interval ends before it starts: " +
                                    iv.start.to_string());
    }
  }
};

/// A product's sales history with O(1) lookup by (store, week, weekday, hour)
/// and per-week aggregates. All eval and feature code reads through this.
class SalesPanel {
 public:
  SalesPanel() = default;

  SalesPanel(std::vector<SalesRecord> records, Date intro_monday)
      : records_(std::move(records)), intro_(intro_monday) {
    for (const auto& r : records_) {
      if (r.units < 0.0)
        throw std::invalid_argument("negative units at " + r.date.to_string());
      Key k{r.store_id, week_index(r.date, intro_), r.date.weekday(), r.hour};
      if (!by_key_.emplace(k, r.units).second)
        throw std::invalid_argument("duplicate sales record at store " +
                                    std::to_string(r.store_id) + " " + r.date.to_string() +
                                    " hour " + std::to_string(r.hour));
      min_week_ = std::min(min_week_, k.week);
      max_week_ = std::max(max_week_, k.week);
      stores_.insert(r.store_id);
    }
  }

  const std::vector<SalesRecord>& records() const { return records_; }
  Date intro_monday() const { return intro_; }
  int min_week() const { return min_week_; }
  int max_week() const { return max_week_; }
  const std::set<int>& stores() const { return stores_; }
  bool empty() const { return records_.empty(); }

  std::optional<double> units_at(int store, int week, int weekday, int hour) const {
    auto it = by_key_.find(Key{store, week, weekday, hour});
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
  }

 private:
  struct Key {
    int store, week, weekday, hour;
    auto operator<=>(const Key&) const = default;
  };

  std::vector<SalesRecord> records_;
  Date intro_;
  std::map<Key, double> by_key_;
  int min_week_ = 1 << 30;
  int max_week_ = -(1 << 30);
  std::set<int> stores_;
};

// ---------------------------------------------------------------------------
// File formats: sales panels as CSV, metadata and calendars as JSON.
// ---------------------------------------------------------------------------

inline void write_sales_csv(const std::string& path, const std::vector<SalesRecord>& records) {
  CsvWriter w(path);
  w.row({"product_id", "store_id", "date", "hour", "units"});
  for (const auto& r : records) {
    w.row({r.product_id, std::to_string(r.store_id), r.date.to_string(),
           std::to_string(r.hour), format_double(r.units)});
  }
}

inline std::vector<SalesRecord> read_sales_csv(const std::string& path) {
  CsvTable t = read_csv(path);
  int cp = t.column("product_id"), cs = t.column("store_id"), cd = t.column("date"),
      ch = t.column("hour"), cu = t.column("units");
  std::vector<SalesRecord> out;
  out.reserve(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    std::string ctx = path + " row " + std::to_string(i + 2);
    if (row.size() != t.header.size()) throw std::runtime_error("wrong field count in " + ctx);
    SalesRecord r;
    r.product_id = row[static_cast<std::size_t>(cp)];
    r.store_id = static_cast<int>(parse_long(row[static_cast<std::size_t>(cs)], ctx));
    r.date = Date::parse(row[static_cast<std::size_t>(cd)]);
    r.hour = static_cast<int>(parse_long(row[static_cast<std::size_t>(ch)], ctx));
    r.units = parse_double(row[static_cast<std::size_t>(cu)], ctx);
    if (r.hour < 0 || r.hour > 23) throw std::runtime_error("hour out of range in " + ctx);
    if (r.units < 0.0) throw std::runtime_error("negative units in " + ctx);
    out.push_back(std::move(r));
  }
  return out;
}

inline json to_json(const ProductMeta& m) {
  json promos = json::array();
  for (const auto& p : m.promo_calendar)
    promos.push_back({{"week", p.week}, {"promo_price", p.promo_price}});
  return {{"product_id", m.product_id},
          {"base_price", m.base_price},
          {"intro_monday", m.intro_monday.to_string()},
          {"subgroup", m.subgroup},
          {"promo_calendar", promos}};
}

inline ProductMeta product_meta_from_json(const json& j) {
  ProductMeta m;
  m.product_id = j.at("product_id").get<std::string>();
  m.base_price = j.at("base_price").get<double>();
  m.intro_monday = Date::parse(j.at("intro_monday").get<std::string>());
  m.subgroup = j.value("subgroup", std::string{});
  for (const auto& p : j.at("promo_calendar"))
    m.promo_calendar.push_back({p.at("week").get<int>(), p.at("promo_price").get<double>()});
  m.validate();
  return m;
}

inline json to_json(const StoreMeta& s) {
  json hours = json::array();
  for (int d = 0; d < 7; ++d) {
    const auto& oh = s.opening_hours[static_cast<std::size_t>(d)];
    if (oh)
      hours.push_back({{"weekday", d}, {"first_hour", oh->first_hour}, {"last_hour", oh->last_hour}});
  }
  return {{"store_id", s.store_id}, {"state", s.state}, {"opening_hours", hours}};
}

inline StoreMeta store_meta_from_json(const json& j) {
  StoreMeta s;
  s.store_id = j.at("store_id").get<int>();
  s.state = j.at("state").get<int>();
  for (const auto& h : j.at("opening_hours")) {
    int d = h.at("weekday").get<int>();
    if (d < 0 || d > 6) throw std::runtime_error("weekday out of range in store meta");
    s.opening_hours[static_cast<std::size_t>(d)] =
        OpeningHours{h.at("first_hour").get<int>(), h.at("last_hour").get<int>()};
  }
  s.validate();
  return s;
}

inline json to_json(const HolidayCalendar& c) {
  json pub = json::array(), school = json::array();
  for (const auto& d : c.public_holidays) pub.push_back(d.to_string());
  for (const auto& iv : c.school_holiday_ranges)
    school.push_back({{"start", iv.start.to_string()}, {"end", iv.end.to_string()}});
  return {{"public_holidays", pub}, {"school_holiday_ranges", school}};
}

inline HolidayCalendar holiday_calendar_from_json(const json& j) {
  HolidayCalendar c;
  for (const auto& d : j.at("public_holidays")) c.public_holidays.insert(Date::parse(d.get<std::string>()));
  for (const auto& iv : j.at("school_holiday_ranges"))
    c.school_holiday_ranges.push_back(
        {Date::parse(iv.at("start").get<std::string>()), Date::parse(iv.at("end").get<std::string>())});
  c.validate();
  return c;
}

}  // namespace salesfc
