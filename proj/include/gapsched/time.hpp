// Copyright 2026 The gapsched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minute-resolution time arithmetic.
//
// All scheduling math runs on exact integer minutes. TimePoint is an absolute
// UTC instant (minutes since 1970-01-01T00:00Z); Duration is a signed minute
// count so that differences of time points are closed under subtraction, and
// the domain types enforce non-negativity where they need it.

#ifndef GAPSCHED_TIME_HPP_
#define GAPSCHED_TIME_HPP_

#include <array>
#include <charconv>
#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "gapsched/error.hpp"

namespace gapsched {

class Duration {
 public:
  constexpr Duration() = default;
  constexpr explicit Duration(std::int64_t minutes) : minutes_(minutes) {}

  static constexpr Duration minutes(std::int64_t m) { return Duration(m); }
  static constexpr Duration hours(std::int64_t h) { return Duration(h * 60); }

  constexpr std::int64_t count() const { return minutes_; }
  constexpr bool whole_hours() const { return minutes_ % 60 == 0; }

  constexpr Duration operator+(Duration o) const { return Duration(minutes_ + o.minutes_); }
  constexpr Duration operator-(Duration o) const { return Duration(minutes_ - o.minutes_); }
  constexpr Duration& operator+=(Duration o) {
    minutes_ += o.minutes_;
    return *this;
  }
  constexpr Duration& operator-=(Duration o) {
    minutes_ -= o.minutes_;
    return *this;
  }
  constexpr auto operator<=>(const Duration&) const = default;

 private:
  std::int64_t minutes_ = 0;
};

class TimePoint {
 public:
  constexpr TimePoint() = default;
  constexpr explicit TimePoint(std::int64_t minutes_since_unix_epoch)
      : minutes_(minutes_since_unix_epoch) {}

  constexpr std::int64_t minutes_since_unix_epoch() const { return minutes_; }

  constexpr TimePoint operator+(Duration d) const { return TimePoint(minutes_ + d.count()); }
  constexpr TimePoint operator-(Duration d) const { return TimePoint(minutes_ - d.count()); }
  constexpr Duration operator-(TimePoint o) const { return Duration(minutes_ - o.minutes_); }
  constexpr auto operator<=>(const TimePoint&) const = default;

 private:
  std::int64_t minutes_ = 0;
};

/// Half-open time interval [start, end).
struct Interval {
  TimePoint start;
  TimePoint end;

  constexpr Duration length() const { return end - start; }
  constexpr bool empty() const { return !(start < end); }
  constexpr bool overlaps(const Interval& o) const { return start < o.end && o.start < end; }
  constexpr bool contains(const Interval& o) const { return start <= o.start && o.end <= end; }
  constexpr auto operator<=>(const Interval&) const = default;
};

/// Hours as text: "39" for whole hours, "1.50" otherwise.
inline std::string format_hours(Duration d) {
  const auto m = d.count();
  const bool neg = m < 0;
  const auto a = neg ? -m : m;
  std::string out = neg ? "-" : "";
  out += std::to_string(a / 60);
  if (a % 60 != 0) {
    // hundredths of an hour, rounded half-up
    const auto hundredths = (a % 60 * 100 + 30) / 60;
    out += hundredths < 10 ? ".0" : ".";
    out += std::to_string(hundredths);
  }
  return out;
}

namespace detail {

inline TimePoint from_civil(int y, unsigned mo, unsigned d, int hh, int mm) {
  using namespace std::chrono;
  const year_month_day ymd{year{y} / month{mo} / day{d}};
  if (!ymd.ok()) throw Error(ErrorCode::Parse, "invalid calendar date");
  if (hh < 0 || hh > 23 || mm < 0 || mm > 59) throw Error(ErrorCode::Parse, "invalid time of day");
  const auto days = sys_days{ymd}.time_since_epoch().count();
  return TimePoint(static_cast<std::int64_t>(days) * 1440 + hh * 60 + mm);
}

struct Civil {
  int year;
  unsigned month;
  unsigned day;
  unsigned weekday;  // 0 = Sunday
  int hour;
  int minute;
};

inline Civil to_civil(TimePoint t) {
  using namespace std::chrono;
  auto m = t.minutes_since_unix_epoch();
  auto days = m / 1440;
  auto rem = m % 1440;
  if (rem < 0) {
    rem += 1440;
    --days;
  }
  const sys_days sd{std::chrono::days{days}};
  const year_month_day ymd{sd};
  return Civil{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
               weekday{sd}.c_encoding(), int(rem / 60), int(rem % 60)};
}

inline int parse_fixed(std::string_view s, std::size_t pos, std::size_t len) {
  if (pos + len > s.size()) throw Error(ErrorCode::Parse, "truncated timestamp");
  int v = 0;
  auto [p, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, v);
  if (ec != std::errc{} || p != s.data() + pos + len) throw Error(ErrorCode::Parse, "non-digit in timestamp");
  return v;
}

inline void expect_char(std::string_view s, std::size_t pos, char c) {
  if (pos >= s.size() || s[pos] != c) {
    throw Error(ErrorCode::Parse, std::string("expected '") + c + "' at offset " + std::to_string(pos));
  }
}

inline std::string two(int v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

}  // namespace detail

/// Parses "YYYY-MM-DDTHH:MM[:SS]" followed by "Z" or a "+HH:MM"/"-HH:MM" offset.
/// Seconds must be zero: the engine works on whole minutes.
inline TimePoint parse_iso8601(std::string_view s) {
  using detail::expect_char;
  using detail::parse_fixed;
  try {
    const int y = parse_fixed(s, 0, 4);
    expect_char(s, 4, '-');
    const int mo = parse_fixed(s, 5, 2);
    expect_char(s, 7, '-');
    const int d = parse_fixed(s, 8, 2);
    if (s.size() <= 10 || (s[10] != 'T' && s[10] != ' ')) throw Error(ErrorCode::Parse, "expected 'T' at offset 10");
    const int hh = parse_fixed(s, 11, 2);
    expect_char(s, 13, ':');
    const int mm = parse_fixed(s, 14, 2);
    std::size_t pos = 16;
    if (pos < s.size() && s[pos] == ':') {
      if (parse_fixed(s, pos + 1, 2) != 0) throw Error(ErrorCode::Parse, "sub-minute precision is not supported");
      pos += 3;
    }
    if (pos >= s.size()) throw Error(ErrorCode::Parse, "missing UTC designator");
    std::int64_t offset = 0;
    if (s[pos] == 'Z') {
      ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
      const int sign = s[pos] == '+' ? 1 : -1;
      const int oh = parse_fixed(s, pos + 1, 2);
      expect_char(s, pos + 3, ':');
      const int om = parse_fixed(s, pos + 4, 2);
      offset = sign * (oh * 60 + om);
      pos += 6;
    } else {
      throw Error(ErrorCode::Parse, "expected 'Z' or UTC offset");
    }
    if (pos != s.size()) throw Error(ErrorCode::Parse, "trailing characters");
    return detail::from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d), hh, mm) - Duration(offset);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, "malformed timestamp '" + std::string(s) + "': " + e.what());
  }
}

/// Canonical form, e.g. "2009-01-02T08:00:00Z".
inline std::string format_iso8601(TimePoint t) {
  const auto c = detail::to_civil(t);
  std::string y = std::to_string(c.year);
  while (y.size() < 4) y = "0" + y;
  return y + "-" + detail::two(int(c.month)) + "-" + detail::two(int(c.day)) + "T" + detail::two(c.hour) + ":" +
         detail::two(c.minute) + ":00Z";
}

/// Listing form, e.g. "Fri Jan 02 08:00:00 GMT 2009".
inline std::string format_listing(TimePoint t) {
  static constexpr std::array<const char*, 7> kDays{"Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"};
  static constexpr std::array<const char*, 12> kMonths{"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                       "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  const auto c = detail::to_civil(t);
  return std::string(kDays[c.weekday]) + " " + kMonths[c.month - 1] + " " + detail::two(int(c.day)) + " " +
         detail::two(c.hour) + ":" + detail::two(c.minute) + ":00 GMT " + std::to_string(c.year);
}

/// Parses the short day-first form used in spreadsheet exports: "2/1/09 8:00"
/// or "02/01/2009 10:00" (day/month/year, 24h clock, UTC).
inline TimePoint parse_dmy(std::string_view s) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::Parse, "malformed timestamp '" + std::string(s) + "': " + why);
  };
  auto next_int = [&](std::size_t& pos, char stop) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc{}) throw fail("expected a number");
    pos = static_cast<std::size_t>(p - s.data());
    if (stop != '\0') {
      if (pos >= s.size() || s[pos] != stop) throw fail("unexpected separator");
      ++pos;
    }
    return v;
  };
  std::size_t pos = 0;
  const int d = next_int(pos, '/');
  const int mo = next_int(pos, '/');
  const std::size_t year_start = pos;
  int y = next_int(pos, ' ');
  if (pos - year_start - 1 <= 2) y += 2000;
  while (pos < s.size() && s[pos] == ' ') ++pos;
  const int hh = next_int(pos, ':');
  const int mm = next_int(pos, '\0');
  if (pos != s.size()) throw fail("trailing characters");
  if (d <= 0 || mo <= 0) throw fail("invalid date");
  try {
    return detail::from_civil(y, static_cast<unsigned>(mo), static_cast<unsigned>(d), hh, mm);
  } catch (const Error& e) {
    throw fail(e.what());
  }
}

}  // namespace gapsched

#endif  // GAPSCHED_TIME_HPP_
