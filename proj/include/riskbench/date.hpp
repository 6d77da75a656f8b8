#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace riskbench {

/// Calendar day. The source data carries no intra-day timestamps, so all
/// durations in the pipeline are whole days.
class Date {
 public:
  Date() = default;

  static Date from_ymd(int year, int month, int day);

  /// Strict ISO-8601 `YYYY-MM-DD`. Throws std::invalid_argument otherwise.
  static Date parse(const std::string& iso);

  /// Days since 1970-01-01 (may be negative).
  static Date from_days(std::int64_t days) {
    Date d;
    d.days_ = days;
    return d;
  }

  std::int64_t days() const { return days_; }
  std::string to_string() const;

  auto operator<=>(const Date&) const = default;
  Date operator+(std::int64_t d) const { return from_days(days_ + d); }
  Date operator-(std::int64_t d) const { return from_days(days_ - d); }
  std::int64_t operator-(const Date& o) const { return days_ - o.days_; }

 private:
  std::int64_t days_ = 0;
};

}  // namespace riskbench
